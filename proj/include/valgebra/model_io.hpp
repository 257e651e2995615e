#pragma once

#include <string>
#include <utility>
#include <vector>

#include "valgebra/quotient.hpp"

namespace valgebra {

/// A parsed model file: one lattice context, named valuations, optional named
/// quotients. All valuations share the context; names are unique.
struct ModelFile {
    ContextPtr ctx;
    std::vector<std::pair<std::string, Valuation>> valuations;
    std::vector<std::pair<std::string, Quotient>> quotients;

    const Valuation* find_valuation(const std::string& name) const;
    const Quotient* find_quotient(const std::string& name) const;

    /// The single instance kind of the model's valuations; throws when the
    /// model is empty or mixes instances (needed to resolve `unit(...)`).
    InstanceKind instance() const;
};

ModelFile load_model(const std::string& path);
ModelFile parse_model(const std::string& text, const std::string& origin);

/// Canonical JSON rendering; `compact` collapses whitespace. Output is
/// parseable with the functions below.
std::string render_valuation(const Valuation& v, bool compact = false);
std::string render_quotient(const Quotient& q, bool compact = false);

Valuation parse_valuation_text(const std::string& text, const ContextPtr& ctx);

/// CLI domain literals: `{A,B}` for variable sets, `[[1,2],[3,4]]` for frames.
Domain parse_domain_text(const std::string& text, const ContextPtr& ctx);

std::string canonical_model_text(const ModelFile& model);

} // namespace valgebra
