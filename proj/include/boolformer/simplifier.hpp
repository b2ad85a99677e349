#pragma once

#include "boolformer/formula.hpp"

namespace boolformer {

/// Negation normal form: double negations eliminated, NOT pushed below
/// AND/OR via De Morgan until it applies only to variables. Constants under
/// NOT are folded. Semantics preserved.
Formula normalize(const Formula& f);

/// One bottom-up rewriting pass over a formula in negation normal form:
/// constant folding, identity elements, idempotence, complementation,
/// absorption, same-operator flattening, duplicate-child removal. Children
/// are left in canonical structural order.
Formula simplify_pass(const Formula& f);

/// normalize, iterate simplify_pass to a structural fixed point, normalize
/// again. Semantics preserved; binary gate count never increases. Throws if
/// no fixed point is reached within 64 passes.
Formula simplify(const Formula& f);

}  // namespace boolformer
