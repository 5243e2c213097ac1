use super::Cut;
use crate::error::Result;
use crate::grover::{amplitude_closed_form, SearchParams};

/// The five equivalent-or-approximate forms of `C(|S_k>)` in the first
/// quadrant.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ChainRecord {
    /// `2 eta B_k (A_k - B_k tan theta)`.
    pub c_exact: f64,
    /// `2 eta sec(theta) sin(2k theta) cos((2k+1) theta)`.
    pub c_form2: f64,
    /// `eta sec(theta)/(2 theta) * sin(2k theta)/sin((2k+1) theta) * dA^2/dk`.
    pub c_rate_form: f64,
    /// The rate form with the sine ratio dropped.
    pub c_approx4: f64,
    /// `(1/(2 A_0)) dA^2/dk`.
    pub c_approx5: f64,
}

/// `dA_k^2/dk = 2 theta sin((4k+2) theta)`, treating `k` as continuous.
pub fn probability_rate(k: u64, params: &SearchParams) -> f64 {
    2.0 * params.theta() * (2.0 * params.angle(k)).sin()
}

/// `A_{k+1}^2 - A_k^2`.
pub fn probability_forward_difference(k: u64, params: &SearchParams) -> f64 {
    let next = amplitude_closed_form(k + 1, params).a;
    let now = amplitude_closed_form(k, params).a;
    next * next - now * now
}

/// `(1/(2 A_0)) dA_k^2/dk` at any `k`, without the quadrant check.
pub fn c5_rate_form(k: u64, params: &SearchParams) -> f64 {
    probability_rate(k, params) / (2.0 * params.a0())
}

/// `C(|S_k>) = 2 eta |B_k (A_k - B_k tan theta)|`, valid for every `k`.
///
/// The factor `A_k - B_k tan theta` is evaluated as `sin(2k theta)/cos(theta)`,
/// which is the same quantity without the cancellation at small `k`.
pub fn concurrence_state(k: u64, params: &SearchParams, cut: Cut) -> Result<f64> {
    let eta = cut.eta(params)?;
    let b = params.angle(k).cos();
    let gap = (2.0 * k as f64 * params.theta()).sin() / params.theta().cos();
    Ok(2.0 * eta * (b * gap).abs())
}

pub fn concurrence_chain(k: u64, params: &SearchParams, cut: Cut) -> Result<ChainRecord> {
    params.check_first_quadrant(k)?;
    let eta = cut.eta(params)?;
    let theta = params.theta();
    let sec = 1.0 / theta.cos();
    let s = amplitude_closed_form(k, params);
    let rate = probability_rate(k, params);
    let ratio = (2.0 * k as f64 * theta).sin() / params.angle(k).sin();
    Ok(ChainRecord {
        c_exact: 2.0 * eta * s.b * (s.a - s.b * params.tan_theta()),
        c_form2: 2.0 * eta * sec * (2.0 * k as f64 * theta).sin() * params.angle(k).cos(),
        c_rate_form: eta * sec / (2.0 * theta) * ratio * rate,
        c_approx4: eta * sec / (2.0 * theta) * rate,
        c_approx5: c5_rate_form(k, params),
    })
}

/// Concurrence right after the oracle, `C(R_O |S_k>) = 2 eta (A_k + B_k tan theta) B_k`.
pub fn concurrence_post_oracle(k: u64, params: &SearchParams, cut: Cut) -> Result<f64> {
    params.check_first_quadrant(k)?;
    let eta = cut.eta(params)?;
    let s = amplitude_closed_form(k, params);
    Ok(2.0 * eta * (s.a + s.b * params.tan_theta()) * s.b)
}

/// Entanglement created by the oracle: `4 eta B_k^2 tan theta`.
pub fn oracle_entanglement_gain(k: u64, params: &SearchParams, cut: Cut) -> Result<f64> {
    params.check_first_quadrant(k)?;
    let eta = cut.eta(params)?;
    let b = params.angle(k).cos();
    Ok(4.0 * eta * b * b * params.tan_theta())
}

/// `C(|S_{k+1}>) - C(R_O |S_k>)`; never positive in the first quadrant.
pub fn reflection_entanglement_change(k: u64, params: &SearchParams, cut: Cut) -> Result<f64> {
    params.check_first_quadrant(k + 1)?;
    let after = concurrence_state(k + 1, params, cut)?;
    let before = concurrence_post_oracle(k, params, cut)?;
    Ok(after - before)
}
