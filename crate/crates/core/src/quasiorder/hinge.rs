use crate::rational::Rational;
use crate::resource::ResourceState;

/// `sum_i g_i (r_i - t)_+`.
pub fn hinge_sum(r: &ResourceState, t: &Rational) -> Rational {
    r.p()
        .iter()
        .zip(r.g())
        .map(|(p, g)| g * &(p / g - t).positive_part())
        .sum()
}

/// `sum_i g_i |r_i - t|`.
pub fn abs_sum(r: &ResourceState, t: &Rational) -> Rational {
    r.p()
        .iter()
        .zip(r.g())
        .map(|(p, g)| g * &(p / g - t).abs())
        .sum()
}

/// `{0} ∪ {r_i} ∪ {r'_i}`, sorted and deduplicated. Both hinge sums are
/// linear in `t` between consecutive entries and coincide outside their
/// range, so these points decide the inequality for every real `t`.
pub fn hinge_breakpoints(r: &ResourceState, r2: &ResourceState) -> Vec<Rational> {
    let mut ts: Vec<Rational> = std::iter::once(Rational::zero())
        .chain(r.ratios())
        .chain(r2.ratios())
        .collect();
    ts.sort();
    ts.dedup();
    ts
}

pub fn hinge_condition_d(r: &ResourceState, r2: &ResourceState) -> bool {
    hinge_breakpoints(r, r2)
        .iter()
        .all(|t| hinge_sum(r2, t) <= hinge_sum(r, t))
}

pub fn hinge_condition_e(r: &ResourceState, r2: &ResourceState) -> bool {
    hinge_breakpoints(r, r2)
        .iter()
        .all(|t| abs_sum(r2, t) <= abs_sum(r, t))
}
