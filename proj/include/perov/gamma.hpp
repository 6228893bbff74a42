#pragma once

namespace perov {

/// Gamma function for z > 0 via the Lanczos approximation (g = 7, 9 terms).
/// Relative error below 1e-12 on (0, 30]. Throws DomainError for z <= 0.
double gamma_fn(double z);

} // namespace perov
