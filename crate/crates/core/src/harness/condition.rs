use super::HarnessError;
use crate::jones::{diagram_stats, twist_knot_diagram};

/// Whether the cable `(r, 2)` of `K_m` lies in the region where the AJ
/// conjecture is proven: `(r+8)(r−8m) > 0` for `m > 0`, `r(r+8m−4) > 0` for `m < 0`.
pub fn theorem_condition(m: i64, r: i64) -> Result<bool, HarnessError> {
    if m == 0 {
        return Err(HarnessError::ZeroTwist);
    }
    if r % 2 == 0 {
        return Err(HarnessError::EvenR(r));
    }
    let (m, r) = (m as i128, r as i128);
    Ok(if m > 0 { (r + 8) * (r - 8 * m) > 0 } else { r * (r + 8 * m - 4) > 0 })
}

/// `r < −4k_−(D)` or `r > 4k_+(D)` for the standard diagram of `K_m`.
pub fn threshold_condition(m: i64, r: i64) -> Result<bool, HarnessError> {
    let s = diagram_stats(&twist_knot_diagram(m)?);
    Ok(r < -4 * s.k_minus as i64 || r > 4 * s.k_plus as i64)
}
