use crate::rational::Rational;
use crate::resource::{ratio_profile, ResourceState};

/// Piecewise-linear concave curve through `(0, 0)` and `(1, 1)`, stored as
/// its breakpoints with collinear interior points removed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LorenzCurve {
    points: Vec<(Rational, Rational)>,
}

impl LorenzCurve {
    pub fn points(&self) -> &[(Rational, Rational)] {
        &self.points
    }

    /// Number of interior breakpoints.
    pub fn kink_count(&self) -> usize {
        self.points.len().saturating_sub(2)
    }

    /// Value of the curve at `t`, for `t` in `[0, 1]`.
    pub fn eval(&self, t: &Rational) -> Rational {
        let k = self.points.partition_point(|(x, _)| x < t);
        if k == 0 {
            return self.points[0].1.clone();
        }
        if k == self.points.len() {
            return self.points[k - 1].1.clone();
        }
        let (t1, l1) = &self.points[k];
        if t1 == t {
            return l1.clone();
        }
        let (t0, l0) = &self.points[k - 1];
        l0 + &((l1 - l0) * (t - t0) / (t1 - t0))
    }

    /// Whether `(t, value)` lies on the curve.
    pub fn contains(&self, t: &Rational, value: &Rational) -> bool {
        !t.is_negative() && *t <= Rational::one() && self.eval(t) == *value
    }
}

/// Breakpoints `(sum g, sum p)` over indices sorted by non-increasing
/// `p_i / g_i`, starting from the origin.
pub fn lorenz_curve(r: &ResourceState) -> LorenzCurve {
    let profile = ratio_profile(r);
    let mut points = vec![(Rational::zero(), Rational::zero())];
    let mut slopes: Vec<&Rational> = Vec::new();
    let (mut t, mut l) = (Rational::zero(), Rational::zero());
    for &i in &profile.permutation {
        t += &r.g()[i];
        l += &r.p()[i];
        let slope = &profile.ratios[i];
        if slopes.last() == Some(&slope) {
            // same slope: extend the previous segment
            *points.last_mut().expect("non-empty") = (t.clone(), l.clone());
        } else {
            points.push((t.clone(), l.clone()));
            slopes.push(slope);
        }
    }
    LorenzCurve { points }
}

/// `a(t) >= b(t)` on `[0, 1]`. Both curves are linear between their
/// breakpoints, so comparing on the union of abscissae is exact.
pub fn lorenz_dominates(a: &LorenzCurve, b: &LorenzCurve) -> bool {
    let mut ts: Vec<&Rational> = a.points.iter().chain(&b.points).map(|(t, _)| t).collect();
    ts.sort();
    ts.dedup();
    ts.into_iter().all(|t| a.eval(t) >= b.eval(t))
}
