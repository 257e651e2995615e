#include "valgebra/model_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace valgebra {

using ordered_json = nlohmann::ordered_json;

namespace {

[[noreturn]] void parse_fail(const std::string& origin, const std::string& message) {
    fail(ErrorKind::parse_error, origin + ": " + message);
}

std::string line_column(const std::string& text, std::size_t byte) {
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    }
    return "line " + std::to_string(line) + ", column " + std::to_string(col);
}

ContextPtr context_from_json(const ordered_json& j, const std::string& origin) {
    if (!j.is_object() || !j.contains("kind")) parse_fail(origin, "context needs a kind");
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "subset") {
        std::vector<std::string> names;
        std::vector<int> cards;
        for (const auto& v : j.at("variables")) {
            names.push_back(v.at("name").get<std::string>());
            cards.push_back(v.value("card", 0));
        }
        return make_subset_context(std::move(names), std::move(cards));
    }
    if (kind == "partition") {
        std::vector<int> atoms;
        for (const auto& a : j.at("universe")) atoms.push_back(a.get<int>());
        return make_partition_context(std::move(atoms));
    }
    parse_fail(origin, "unknown context kind '" + kind + "'");
}

Domain scope_from_json(const ordered_json& j, const ContextPtr& ctx,
                       const std::string& origin) {
    std::vector<int> vars;
    for (const auto& name : j) {
        int id = ctx->variable_id(name.get<std::string>());
        if (id < 0) parse_fail(origin, "unknown variable '" + name.get<std::string>() + "'");
        vars.push_back(id);
    }
    return Domain::subset(ctx, std::move(vars));
}

Domain frame_from_json(const ordered_json& j, const ContextPtr& ctx) {
    std::vector<Block> blocks;
    for (const auto& b : j) {
        Block block;
        for (const auto& a : b) block.push_back(a.get<int>());
        blocks.push_back(std::move(block));
    }
    return Domain::partition(ctx, std::move(blocks));
}

Valuation valuation_from_json(const ordered_json& j, const ContextPtr& ctx,
                              const std::string& origin) {
    const std::string type = j.at("type").get<std::string>();
    if (type == "potential") {
        Domain scope = scope_from_json(j.at("scope"), ctx, origin);
        std::vector<double> values = j.at("values").get<std::vector<double>>();
        return PotentialTable(std::move(scope), std::move(values));
    }
    if (type == "gaussian") {
        Domain scope = scope_from_json(j.at("scope"), ctx, origin);
        std::vector<double> mean = j.at("mean").get<std::vector<double>>();
        std::vector<double> flat = j.at("concentration").get<std::vector<double>>();
        const std::size_t n = scope.variables().size();
        if (flat.size() != n * n)
            parse_fail(origin, "concentration must have " + std::to_string(n * n) +
                                   " row-major entries");
        SquareMatrix k(n);
        k.a = std::move(flat);
        return GaussianPotential(std::move(scope), std::move(mean), std::move(k));
    }
    if (type == "mass") {
        Domain frame = j.contains("frame") ? frame_from_json(j.at("frame"), ctx)
                                           : scope_from_json(j.at("scope"), ctx, origin);
        std::map<std::uint32_t, double> masses;
        for (const auto& focal : j.at("focal")) {
            std::uint32_t mask = 0;
            for (const auto& cell : focal.at("set")) {
                const int c = cell.get<int>();
                if (c < 0 || c >= static_cast<int>(frame.cell_count()))
                    parse_fail(origin, "focal cell index out of range");
                mask |= std::uint32_t(1) << c;
            }
            masses[mask] += focal.at("mass").get<double>();
        }
        return MassFunction(std::move(frame), std::move(masses));
    }
    parse_fail(origin, "unknown valuation type '" + type + "'");
}

ordered_json scope_to_json(const Domain& d) {
    ordered_json j = ordered_json::array();
    for (int v : d.variables())
        j.push_back(d.context()->variable_names[static_cast<std::size_t>(v)]);
    return j;
}

ordered_json valuation_to_json(const Valuation& v) {
    ordered_json j;
    switch (v.kind()) {
        case InstanceKind::potential:
            j["type"] = "potential";
            j["scope"] = scope_to_json(v.label());
            j["values"] = v.potential().values;
            break;
        case InstanceKind::gaussian:
            j["type"] = "gaussian";
            j["scope"] = scope_to_json(v.label());
            j["mean"] = v.gaussian().mean;
            j["concentration"] = v.gaussian().concentration.a;
            break;
        case InstanceKind::belief: {
            j["type"] = "mass";
            const Domain& frame = v.label();
            if (frame.kind() == LatticeKind::partition) {
                ordered_json blocks = ordered_json::array();
                for (const auto& b : frame.blocks()) blocks.push_back(b);
                j["frame"] = blocks;
            } else {
                j["scope"] = scope_to_json(frame);
            }
            ordered_json focal = ordered_json::array();
            for (const auto& [mask, value] : v.mass().masses) {
                ordered_json cells = ordered_json::array();
                for (std::size_t c = 0; c < frame.cell_count(); ++c)
                    if (mask >> c & 1) cells.push_back(c);
                focal.push_back(ordered_json{{"set", cells}, {"mass", value}});
            }
            j["focal"] = focal;
            break;
        }
    }
    return j;
}

} // namespace

const Valuation* ModelFile::find_valuation(const std::string& name) const {
    for (const auto& [n, v] : valuations)
        if (n == name) return &v;
    return nullptr;
}

const Quotient* ModelFile::find_quotient(const std::string& name) const {
    for (const auto& [n, q] : quotients)
        if (n == name) return &q;
    return nullptr;
}

InstanceKind ModelFile::instance() const {
    if (valuations.empty()) fail(ErrorKind::invalid_value, "model declares no valuations");
    InstanceKind kind = valuations.front().second.kind();
    for (const auto& [name, v] : valuations)
        if (v.kind() != kind)
            fail(ErrorKind::instance_mismatch, "model mixes valuation instances");
    return kind;
}

ModelFile parse_model(const std::string& text, const std::string& origin) {
    ordered_json j;
    try {
        j = ordered_json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        parse_fail(origin, std::string(e.what()) + " at " + line_column(text, e.byte));
    }
    ModelFile model;
    if (!j.contains("context")) parse_fail(origin, "missing context");
    model.ctx = context_from_json(j.at("context"), origin);
    for (const auto& entry : j.value("valuations", ordered_json::array())) {
        const std::string name = entry.at("name").get<std::string>();
        if (model.find_valuation(name)) parse_fail(origin, "duplicate name '" + name + "'");
        model.valuations.emplace_back(name, valuation_from_json(entry, model.ctx, origin));
    }
    for (const auto& entry : j.value("quotients", ordered_json::array())) {
        const std::string name = entry.at("name").get<std::string>();
        auto resolve = [&](const ordered_json& side) -> Valuation {
            if (side.is_string()) {
                const Valuation* v = model.find_valuation(side.get<std::string>());
                if (!v) parse_fail(origin, "unknown valuation '" + side.get<std::string>() + "'");
                return *v;
            }
            return valuation_from_json(side, model.ctx, origin);
        };
        model.quotients.emplace_back(name,
                                     Quotient(resolve(entry.at("num")), resolve(entry.at("den"))));
    }
    return model;
}

ModelFile load_model(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail(ErrorKind::parse_error, "cannot open " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_model(buffer.str(), path);
}

std::string render_valuation(const Valuation& v, bool compact) {
    return valuation_to_json(v).dump(compact ? -1 : 2);
}

std::string render_quotient(const Quotient& q, bool compact) {
    ordered_json j;
    j["num"] = valuation_to_json(q.num());
    j["den"] = valuation_to_json(q.den());
    return j.dump(compact ? -1 : 2);
}

Valuation parse_valuation_text(const std::string& text, const ContextPtr& ctx) {
    ordered_json j;
    try {
        j = ordered_json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        fail(ErrorKind::parse_error, std::string(e.what()));
    }
    return valuation_from_json(j, ctx, "<valuation>");
}

Domain parse_domain_text(const std::string& text, const ContextPtr& ctx) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
    if (s.size() >= 2 && s.front() == '{' && s.back() == '}') {
        std::vector<int> vars;
        std::string body = s.substr(1, s.size() - 2);
        std::istringstream is(body);
        std::string item;
        while (std::getline(is, item, ',')) {
            if (item.empty()) continue;
            int id = ctx->variable_id(item);
            if (id < 0) fail(ErrorKind::parse_error, "unknown variable '" + item + "'");
            vars.push_back(id);
        }
        return Domain::subset(ctx, std::move(vars));
    }
    if (!s.empty() && s.front() == '[') {
        ordered_json j;
        try {
            j = ordered_json::parse(s);
        } catch (const nlohmann::json::parse_error&) {
            fail(ErrorKind::parse_error, "malformed partition literal '" + text + "'");
        }
        return frame_from_json(j, ctx);
    }
    fail(ErrorKind::parse_error, "malformed domain literal '" + text + "'");
}

std::string canonical_model_text(const ModelFile& model) {
    ordered_json j;
    if (model.ctx->kind == LatticeKind::subset) {
        ordered_json vars = ordered_json::array();
        for (std::size_t i = 0; i < model.ctx->variable_count(); ++i)
            vars.push_back(ordered_json{{"name", model.ctx->variable_names[i]},
                                        {"card", model.ctx->cardinalities[i]}});
        j["context"] = ordered_json{{"kind", "subset"}, {"variables", vars}};
    } else {
        j["context"] = ordered_json{{"kind", "partition"}, {"universe", model.ctx->atoms}};
    }
    ordered_json vals = ordered_json::array();
    for (const auto& [name, v] : model.valuations) {
        ordered_json entry = valuation_to_json(v);
        entry.insert(entry.begin(), {"name", name});
        vals.push_back(entry);
    }
    j["valuations"] = vals;
    if (!model.quotients.empty()) {
        ordered_json quots = ordered_json::array();
        for (const auto& [name, q] : model.quotients) {
            ordered_json entry;
            entry["name"] = name;
            entry["num"] = valuation_to_json(q.num());
            entry["den"] = valuation_to_json(q.den());
            quots.push_back(entry);
        }
        j["quotients"] = quots;
    }
    return j.dump(2);
}

} // namespace valgebra
