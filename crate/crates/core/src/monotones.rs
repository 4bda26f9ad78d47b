//! Thermal monotones of the form `Σ g_i f(p_i / g_i)` for convex `f`, plus
//! the Rényi divergences.
//!
//! Monotones whose value is rational for rational input (hinges,
//! polynomials) are evaluated exactly. Logarithmic ones are evaluated in
//! [`Real`]. The non-increase guarantee only holds when `f` really is
//! convex; [`ConvexFunction`] implementors are trusted on that.

use std::fmt;

use crate::error::{Error, Result};
use crate::rational::Rational;
use crate::real::Real;
use crate::resource::ResourceState;

/// An extended real: exact, approximate, or `+∞`.
#[derive(Clone, Debug, PartialEq)]
pub enum Value {
    Exact(Rational),
    Approx(Real),
    Infinite,
}

impl Value {
    pub fn to_real(&self) -> Option<Real> {
        match self {
            Value::Exact(q) => Some(Real::from_rational(q)),
            Value::Approx(x) => Some(x.clone()),
            Value::Infinite => None,
        }
    }

    pub fn is_infinite(&self) -> bool {
        matches!(self, Value::Infinite)
    }

    fn add(self, other: Value) -> Value {
        match (self, other) {
            (Value::Infinite, _) | (_, Value::Infinite) => Value::Infinite,
            (Value::Exact(a), Value::Exact(b)) => Value::Exact(a + b),
            (a, b) => Value::Approx(a.to_real().expect("finite") + b.to_real().expect("finite")),
        }
    }

    fn scale(self, w: &Rational) -> Value {
        match self {
            Value::Exact(a) => Value::Exact(a * w),
            Value::Approx(a) => Value::Approx(a * Real::from_rational(w)),
            Value::Infinite => Value::Infinite,
        }
    }

    /// `self <= other`, exactly when both are exact, otherwise up to
    /// `tolerance`. `+∞ <= +∞` holds.
    pub fn le_within(&self, other: &Value, tolerance: &Real) -> bool {
        match (self, other) {
            (_, Value::Infinite) => true,
            (Value::Infinite, _) => false,
            (Value::Exact(a), Value::Exact(b)) => a <= b,
            (a, b) => {
                let (a, b) = (a.to_real().expect("finite"), b.to_real().expect("finite"));
                a <= &b + tolerance
            }
        }
    }
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Value::Exact(q) => write!(f, "{q}"),
            Value::Approx(x) => write!(f, "{x:.15}"),
            Value::Infinite => f.write_str("inf"),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct MonotoneValue {
    pub name: String,
    pub value: Value,
}

impl MonotoneValue {
    /// Whether going from `self` (source) to `after` (target) respects the
    /// monotone.
    pub fn non_increasing_to(&self, after: &MonotoneValue, tolerance: &Real) -> bool {
        after.value.le_within(&self.value, tolerance)
    }
}

/// A convex function on `[0, ∞)` with an explicitly declared value at 0.
pub trait ConvexFunction {
    fn name(&self) -> String;

    /// Value (or limit) at ratio 0.
    fn at_zero(&self) -> Value;

    /// Value at a strictly positive ratio.
    fn at(&self, x: &Rational) -> Value;
}

/// `Σ g_i f(p_i / g_i)`.
pub fn f_divergence(r: &ResourceState, f: &dyn ConvexFunction) -> MonotoneValue {
    let value = r
        .p()
        .iter()
        .zip(r.g())
        .map(|(p, g)| {
            let fx = if p.is_zero() {
                f.at_zero()
            } else {
                f.at(&(p / g))
            };
            fx.scale(g)
        })
        .fold(Value::Exact(Rational::zero()), Value::add);
    MonotoneValue {
        name: f.name(),
        value,
    }
}

/// `|x - 1|`.
pub struct TotalVariation;

impl ConvexFunction for TotalVariation {
    fn name(&self) -> String {
        "total-variation".into()
    }
    fn at_zero(&self) -> Value {
        Value::Exact(Rational::one())
    }
    fn at(&self, x: &Rational) -> Value {
        Value::Exact((x - Rational::one()).abs())
    }
}

/// `x^2 - 1`.
pub struct ChiSquare;

impl ConvexFunction for ChiSquare {
    fn name(&self) -> String {
        "chi-square".into()
    }
    fn at_zero(&self) -> Value {
        Value::Exact(-Rational::one())
    }
    fn at(&self, x: &Rational) -> Value {
        Value::Exact(x * x - Rational::one())
    }
}

/// `(x - t)_+`.
pub struct Hinge(pub Rational);

impl ConvexFunction for Hinge {
    fn name(&self) -> String {
        format!("hinge:{}", self.0)
    }
    fn at_zero(&self) -> Value {
        Value::Exact((-&self.0).positive_part())
    }
    fn at(&self, x: &Rational) -> Value {
        Value::Exact((x - &self.0).positive_part())
    }
}

/// `|x - t|`.
pub struct AbsShift(pub Rational);

impl ConvexFunction for AbsShift {
    fn name(&self) -> String {
        format!("abs:{}", self.0)
    }
    fn at_zero(&self) -> Value {
        Value::Exact(self.0.abs())
    }
    fn at(&self, x: &Rational) -> Value {
        Value::Exact((x - &self.0).abs())
    }
}

/// `x ln x`, with `0 ln 0 = 0`.
pub struct XLogX;

impl ConvexFunction for XLogX {
    fn name(&self) -> String {
        "relative-entropy".into()
    }
    fn at_zero(&self) -> Value {
        Value::Exact(Rational::zero())
    }
    fn at(&self, x: &Rational) -> Value {
        if x.is_one() {
            return Value::Exact(Rational::zero());
        }
        let xr = Real::from_rational(x);
        Value::Approx(&xr * &xr.ln())
    }
}

/// `-ln x`, infinite at 0.
pub struct NegLog;

impl ConvexFunction for NegLog {
    fn name(&self) -> String {
        "reverse-relative-entropy".into()
    }
    fn at_zero(&self) -> Value {
        Value::Infinite
    }
    fn at(&self, x: &Rational) -> Value {
        if x.is_one() {
            return Value::Exact(Rational::zero());
        }
        Value::Approx(-Real::from_rational(x).ln())
    }
}

/// `D(p||g)`, or `D(g||p)` when `reversed`.
pub fn relative_entropy(r: &ResourceState, reversed: bool) -> MonotoneValue {
    if reversed {
        f_divergence(r, &NegLog)
    } else {
        f_divergence(r, &XLogX)
    }
}

fn validate_order(alpha: &Rational) -> Result<()> {
    if alpha.is_negative() || alpha.is_one() {
        return Err(Error::InvalidRenyiOrder(alpha.clone()));
    }
    Ok(())
}

/// `Σ_i g_i (p_i/g_i)^α` over the support of `p`.
fn renyi_sum(r: &ResourceState, alpha: &Rational) -> Value {
    let support = || r.p().iter().zip(r.g()).filter(|(p, _)| !p.is_zero());
    if alpha.is_zero() {
        return Value::Exact(support().map(|(_, g)| g).sum());
    }
    if alpha.is_integer() {
        let k = u32::try_from(alpha.numer()).expect("Renyi order fits in u32");
        return Value::Exact(support().map(|(p, g)| g * &(p / g).pow(k)).sum());
    }
    let a = Real::from_rational(alpha);
    support()
        .map(|(p, g)| {
            let ratio = p / g;
            if ratio.is_one() {
                Value::Exact(g.clone())
            } else {
                Value::Approx(Real::from_rational(g) * Real::from_rational(&ratio).powf(&a))
            }
        })
        .fold(Value::Exact(Rational::zero()), Value::add)
}

/// `D_α(p||g) = ln(Σ p_i^α g_i^{1-α}) / (α - 1)` for `α >= 0`, `α != 1`.
/// Terms with `p_i = 0` are dropped, including at `α = 0`. The sign
/// convention makes `D_α >= 0`, `D_0 = -ln Σ_{p_i>0} g_i` and
/// `D_α -> ln max_i p_i/g_i` as `α -> ∞`.
pub fn renyi_divergence(r: &ResourceState, alpha: &Rational) -> Result<MonotoneValue> {
    validate_order(alpha)?;
    let sum = renyi_sum(r, alpha);
    let value = match &sum {
        Value::Exact(s) if s.is_one() => Value::Exact(Rational::zero()),
        _ => {
            let s = sum.to_real().expect("finite");
            let denom = Real::from_rational(&(alpha - Rational::one()));
            Value::Approx(s.ln() / denom)
        }
    };
    Ok(MonotoneValue {
        name: format!("renyi:{alpha}"),
        value,
    })
}

/// A named thermal monotone.
pub trait Monotone: Send + Sync {
    fn name(&self) -> String;
    fn evaluate(&self, r: &ResourceState) -> MonotoneValue;
}

struct FDivergence<F>(F);

impl<F: ConvexFunction + Send + Sync> Monotone for FDivergence<F> {
    fn name(&self) -> String {
        self.0.name()
    }
    fn evaluate(&self, r: &ResourceState) -> MonotoneValue {
        f_divergence(r, &self.0)
    }
}

struct Renyi(Rational);

impl Monotone for Renyi {
    fn name(&self) -> String {
        format!("renyi:{}", self.0)
    }
    fn evaluate(&self, r: &ResourceState) -> MonotoneValue {
        renyi_divergence(r, &self.0).expect("order validated at construction")
    }
}

/// Named monotones in registration order. Parametric families are also
/// reachable by name through [`MonotoneRegistry::resolve`]:
/// `renyi:<α>`, `hinge:<t>` and `abs:<t>`.
pub struct MonotoneRegistry {
    entries: Vec<Box<dyn Monotone>>,
}

impl MonotoneRegistry {
    pub fn new() -> Self {
        MonotoneRegistry {
            entries: Vec::new(),
        }
    }

    pub fn standard() -> Self {
        let mut reg = MonotoneRegistry::new();
        reg.register(Box::new(FDivergence(XLogX)));
        reg.register(Box::new(FDivergence(NegLog)));
        for alpha in [Rational::zero(), Rational::frac(1, 2), Rational::from(2)] {
            reg.register(Box::new(Renyi(alpha)));
        }
        reg.register(Box::new(FDivergence(TotalVariation)));
        reg.register(Box::new(FDivergence(ChiSquare)));
        reg
    }

    pub fn register(&mut self, monotone: Box<dyn Monotone>) {
        let name = monotone.name();
        match self.entries.iter().position(|m| m.name() == name) {
            Some(i) => self.entries[i] = monotone,
            None => self.entries.push(monotone),
        }
    }

    pub fn names(&self) -> Vec<String> {
        self.entries.iter().map(|m| m.name()).collect()
    }

    pub fn get(&self, name: &str) -> Option<&dyn Monotone> {
        self.entries
            .iter()
            .find(|m| m.name() == name)
            .map(|m| m.as_ref())
    }

    pub fn iter(&self) -> impl Iterator<Item = &dyn Monotone> {
        self.entries.iter().map(|m| m.as_ref())
    }

    /// Looks up a registered monotone, or builds a parametric one.
    pub fn resolve(&self, name: &str) -> Result<Box<dyn Monotone>> {
        let unknown = || Error::UnknownStrategy {
            kind: "monotone",
            name: name.to_string(),
        };
        let builtin: Option<Box<dyn Monotone>> = match name {
            "relative-entropy" => Some(Box::new(FDivergence(XLogX))),
            "reverse-relative-entropy" => Some(Box::new(FDivergence(NegLog))),
            "total-variation" => Some(Box::new(FDivergence(TotalVariation))),
            "chi-square" => Some(Box::new(FDivergence(ChiSquare))),
            _ => None,
        };
        if let Some(m) = builtin {
            return Ok(m);
        }
        let (family, param) = name.split_once(':').ok_or_else(unknown)?;
        let param: Rational = param.parse()?;
        match family {
            "renyi" => {
                validate_order(&param)?;
                Ok(Box::new(Renyi(param)))
            }
            "hinge" => Ok(Box::new(FDivergence(Hinge(param)))),
            "abs" => Ok(Box::new(FDivergence(AbsShift(param)))),
            _ => Err(unknown()),
        }
    }

    pub fn evaluate(&self, r: &ResourceState) -> Vec<MonotoneValue> {
        self.entries.iter().map(|m| m.evaluate(r)).collect()
    }
}

impl Default for MonotoneRegistry {
    fn default() -> Self {
        Self::standard()
    }
}
