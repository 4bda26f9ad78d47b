use crate::lp::{solve, LinearProgram, LpSolution};
use crate::rational::{dot, Rational};
use crate::resource::ResourceState;

/// A column-stochastic `n' x n` matrix, intended to map one Gibbs vector
/// onto another.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GibbsStochasticMap {
    matrix: Vec<Vec<Rational>>,
}

impl GibbsStochasticMap {
    pub fn from_rows(matrix: Vec<Vec<Rational>>) -> Self {
        GibbsStochasticMap { matrix }
    }

    pub fn identity(n: usize) -> Self {
        let matrix = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        if i == j {
                            Rational::one()
                        } else {
                            Rational::zero()
                        }
                    })
                    .collect()
            })
            .collect();
        GibbsStochasticMap { matrix }
    }

    /// `target * e^T`: sends every input to `target`.
    pub fn constant(target: &[Rational], n: usize) -> Self {
        let matrix = target.iter().map(|x| vec![x.clone(); n]).collect();
        GibbsStochasticMap { matrix }
    }

    pub fn rows(&self) -> &[Vec<Rational>] {
        &self.matrix
    }

    pub fn num_rows(&self) -> usize {
        self.matrix.len()
    }

    pub fn num_cols(&self) -> usize {
        self.matrix.first().map_or(0, Vec::len)
    }

    pub fn apply(&self, v: &[Rational]) -> Vec<Rational> {
        self.matrix.iter().map(|row| dot(row, v)).collect()
    }

    /// `self * inner`: first `inner`, then `self`.
    pub fn compose(&self, inner: &GibbsStochasticMap) -> GibbsStochasticMap {
        let k = inner.num_cols();
        let matrix = self
            .matrix
            .iter()
            .map(|row| {
                (0..k)
                    .map(|j| {
                        row.iter()
                            .zip(&inner.matrix)
                            .map(|(a, inner_row)| a * &inner_row[j])
                            .sum()
                    })
                    .collect()
            })
            .collect();
        GibbsStochasticMap { matrix }
    }

    /// Entries non-negative and every column summing to exactly one.
    pub fn is_column_stochastic(&self) -> bool {
        let n = self.num_cols();
        self.matrix.iter().all(|row| row.len() == n)
            && self.matrix.iter().flatten().all(|x| !x.is_negative())
            && (0..n).all(|j| {
                self.matrix
                    .iter()
                    .map(|row| &row[j])
                    .sum::<Rational>()
                    .is_one()
            })
    }

    /// `G p = p'`, `G g = g'` and column-stochastic, all exactly.
    pub fn witnesses(&self, from: &ResourceState, to: &ResourceState) -> bool {
        self.num_rows() == to.len()
            && self.num_cols() == from.len()
            && self.is_column_stochastic()
            && self.apply(from.p()) == to.p()
            && self.apply(from.g()) == to.g()
    }
}

/// The feasibility program in the `n' * n` entries of `G` (row-major):
/// `G p = p'`, `G g = g'`, `e^T G = e^T`, `G >= 0`, with zero objective.
pub fn gibbs_stochastic_program(r: &ResourceState, r2: &ResourceState) -> LinearProgram {
    let n = r.len();
    let m = r2.len();
    let mut lp = LinearProgram::new(n * m);
    for (source, target) in [(r.p(), r2.p()), (r.g(), r2.g())] {
        for (i, t) in target.iter().enumerate() {
            let mut row = vec![Rational::zero(); n * m];
            row[i * n..(i + 1) * n].clone_from_slice(source);
            lp.add_eq(row, t.clone());
        }
    }
    for j in 0..n {
        let mut row = vec![Rational::zero(); n * m];
        for i in 0..m {
            row[i * n + j] = Rational::one();
        }
        lp.add_eq(row, Rational::one());
    }
    lp
}

fn witness_from(sol: &LpSolution, n: usize) -> Option<GibbsStochasticMap> {
    let point = sol.point.as_ref()?;
    Some(GibbsStochasticMap::from_rows(
        point.chunks(n).map(<[Rational]>::to_vec).collect(),
    ))
}

/// Decides whether `r` can be mapped to `r2` by a Gibbs-stochastic matrix,
/// returning a witness when it can. Only the phase-1 feasibility problem is
/// solved; the objective is identically zero.
pub fn convertible_lp(r: &ResourceState, r2: &ResourceState) -> (bool, Option<GibbsStochasticMap>) {
    let lp = gibbs_stochastic_program(r, r2);
    let sol = solve(&lp).expect("well-formed by construction");
    if sol.is_optimal() {
        (true, witness_from(&sol, r.len()))
    } else {
        (false, None)
    }
}
