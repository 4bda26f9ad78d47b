//! Shared samplers and an LP oracle that does not go through the simplex
//! code.

#![allow(dead_code)]

use rand::seq::SliceRandom;
use rand::Rng;
use thermo_core::lp::{LinearProgram, LpStatus};
use thermo_core::{make_resource, Rational, ResourceState};

pub fn q(n: i64, d: i64) -> Rational {
    Rational::frac(n, d)
}

/// Random probability vector of length `n` whose entries share a
/// denominator `<= max_den`. With `positive`, every entry is `> 0`.
pub fn distribution<R: Rng>(rng: &mut R, n: usize, max_den: i64, positive: bool) -> Vec<Rational> {
    let lo = if positive { n as i64 } else { 1 };
    assert!(
        lo <= max_den,
        "denominator bound too small for {n} positive entries"
    );
    let d = rng.gen_range(lo..=max_den);
    let mut counts = vec![if positive { 1i64 } else { 0 }; n];
    let free = d - counts.iter().sum::<i64>();
    for _ in 0..free {
        counts[rng.gen_range(0..n)] += 1;
    }
    counts.into_iter().map(|c| q(c, d)).collect()
}

pub fn state<R: Rng>(rng: &mut R, n: usize, max_den: i64) -> ResourceState {
    let g = distribution(rng, n, max_den, true);
    let p = distribution(rng, n, max_den, false);
    make_resource(p, g).unwrap()
}

pub fn state_with_gibbs<R: Rng>(rng: &mut R, g: &[Rational], max_den: i64) -> ResourceState {
    let p = distribution(rng, g.len(), max_den, false);
    make_resource(p, g.to_vec()).unwrap()
}

/// Random column-stochastic `rows x cols` matrix, entries with denominators
/// `<= max(max_den, rows)`, every row having a positive entry.
pub fn stochastic_matrix<R: Rng>(
    rng: &mut R,
    rows: usize,
    cols: usize,
    max_den: i64,
) -> Vec<Vec<Rational>> {
    let owner: Vec<usize> = (0..rows).map(|_| rng.gen_range(0..cols)).collect();
    let max_den = max_den.max(rows as i64);
    let columns: Vec<Vec<Rational>> = (0..cols)
        .map(|j| {
            let mut counts: Vec<i64> = owner.iter().map(|&o| i64::from(o == j)).collect();
            let fixed: i64 = counts.iter().sum();
            let d = rng.gen_range(fixed.max(1)..=max_den);
            for _ in fixed..d {
                counts[rng.gen_range(0..rows)] += 1;
            }
            counts.into_iter().map(|c| q(c, d)).collect()
        })
        .collect();
    (0..rows)
        .map(|i| columns.iter().map(|c| c[i].clone()).collect())
        .collect()
}

pub fn apply(m: &[Vec<Rational>], v: &[Rational]) -> Vec<Rational> {
    m.iter()
        .map(|row| row.iter().zip(v).map(|(a, b)| a * b).sum())
        .collect()
}

/// Pairs `(R, R')` with `n, n' <= max_n`, drawn from three generators so
/// that both convertible and non-convertible pairs occur often: independent
/// states, states sharing a Gibbs vector, and `R' = G R` for a random
/// column-stochastic `G`.
pub fn state_pair<R: Rng>(rng: &mut R, max_n: usize) -> (ResourceState, ResourceState) {
    let n = rng.gen_range(1..=max_n);
    match rng.gen_range(0..3) {
        0 => {
            let m = rng.gen_range(1..=max_n);
            (state(rng, n, 12), state(rng, m, 12))
        }
        1 => {
            let g = distribution(rng, n, 12, true);
            (state_with_gibbs(rng, &g, 12), state_with_gibbs(rng, &g, 12))
        }
        _ => {
            let m = rng.gen_range(1..=max_n);
            let r = state(rng, n, 12);
            let g_map = stochastic_matrix(rng, m, n, 4);
            let r2 = make_resource(apply(&g_map, r.p()), apply(&g_map, r.g())).unwrap();
            (r, r2)
        }
    }
}

pub fn shuffle_levels<R: Rng>(rng: &mut R, r: &ResourceState) -> ResourceState {
    let mut idx: Vec<usize> = (0..r.len()).collect();
    idx.shuffle(rng);
    make_resource(
        idx.iter().map(|&i| r.p()[i].clone()).collect(),
        idx.iter().map(|&i| r.g()[i].clone()).collect(),
    )
    .unwrap()
}

pub fn small_lp<R: Rng>(rng: &mut R) -> LinearProgram {
    let n = rng.gen_range(1..=6);
    let me = rng.gen_range(0..=3);
    let ml = rng.gen_range(0..=(6 - me));
    let mut ints = |k: usize, lo: i64, hi: i64| -> Vec<Rational> {
        (0..k)
            .map(|_| Rational::from(rng.gen_range(lo..=hi)))
            .collect()
    };
    let mut lp = LinearProgram::new(n).minimize(ints(n, -4, 4));
    for _ in 0..me {
        let row = ints(n, -3, 3);
        let b = ints(1, -2, 5).remove(0);
        lp.add_eq(row, b);
    }
    for _ in 0..ml {
        let row = ints(n, -3, 3);
        let b = ints(1, -2, 6).remove(0);
        lp.add_le(row, b);
    }
    lp
}

// ---- brute-force oracle -------------------------------------------------

/// Reduced row echelon form of the augmented matrix. Returns `None` if the
/// system is inconsistent, otherwise the independent rows.
fn independent_rows(mut rows: Vec<Vec<Rational>>) -> Option<Vec<Vec<Rational>>> {
    let cols = rows.first().map_or(0, |r| r.len() - 1);
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(rank, p);
        let inv = rows[rank][c].recip().unwrap();
        for x in rows[rank].iter_mut() {
            *x = &*x * &inv;
        }
        let pivot = rows[rank].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i != rank && !row[c].is_zero() {
                let f = row[c].clone();
                for (x, pv) in row.iter_mut().zip(&pivot) {
                    *x = &*x - &(&f * pv);
                }
            }
        }
        rank += 1;
    }
    if rows[rank..].iter().any(|r| !r[cols].is_zero()) {
        return None;
    }
    rows.truncate(rank);
    Some(rows)
}

/// Solves the square system `B x = b` by Gauss-Jordan; `None` if singular.
fn solve_square(mut aug: Vec<Vec<Rational>>) -> Option<Vec<Rational>> {
    let k = aug.len();
    for c in 0..k {
        let p = (c..k).find(|&i| !aug[i][c].is_zero())?;
        aug.swap(c, p);
        let inv = aug[c][c].recip().unwrap();
        for x in aug[c].iter_mut() {
            *x = &*x * &inv;
        }
        let pivot = aug[c].clone();
        for (i, row) in aug.iter_mut().enumerate() {
            if i != c && !row[c].is_zero() {
                let f = row[c].clone();
                for (x, pv) in row.iter_mut().zip(&pivot) {
                    *x = &*x - &(&f * pv);
                }
            }
        }
    }
    Some(aug.into_iter().map(|r| r[k].clone()).collect())
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, n, k, &mut Vec::new(), &mut out);
    out
}

/// All basic feasible solutions of `{x >= 0 : A x = b}` (rows given as
/// `[a | b]`). `None` if `A x = b` has no solution at all.
fn vertices(rows: Vec<Vec<Rational>>, num_cols: usize) -> Option<Vec<Vec<Rational>>> {
    if rows.is_empty() {
        return Some(vec![vec![Rational::zero(); num_cols]]);
    }
    let rows = independent_rows(rows)?;
    let r = rows.len();
    let mut out = Vec::new();
    for basis in combinations(num_cols, r) {
        let aug: Vec<Vec<Rational>> = rows
            .iter()
            .map(|row| {
                basis
                    .iter()
                    .map(|&j| row[j].clone())
                    .chain(std::iter::once(row[num_cols].clone()))
                    .collect()
            })
            .collect();
        if let Some(xb) = solve_square(aug) {
            if xb.iter().all(|x| !x.is_negative()) {
                let mut x = vec![Rational::zero(); num_cols];
                for (&j, v) in basis.iter().zip(xb) {
                    x[j] = v;
                }
                out.push(x);
            }
        }
    }
    Some(out)
}

/// Standard-form rows `[A | I_slack | b]` for the program.
fn standard_form(lp: &LinearProgram) -> (Vec<Vec<Rational>>, usize) {
    let n = lp.num_vars;
    let ml = lp.le_matrix.len();
    let cols = n + ml;
    let mut rows = Vec::new();
    for (row, b) in lp.eq_matrix.iter().zip(&lp.eq_rhs) {
        let mut r = row.clone();
        r.extend(std::iter::repeat_n(Rational::zero(), ml));
        r.push(b.clone());
        rows.push(r);
    }
    for (k, (row, b)) in lp.le_matrix.iter().zip(&lp.le_rhs).enumerate() {
        let mut r = row.clone();
        r.extend((0..ml).map(|j| {
            if j == k {
                Rational::one()
            } else {
                Rational::zero()
            }
        }));
        r.push(b.clone());
        rows.push(r);
    }
    (rows, cols)
}

/// Status and optimum by exhaustive vertex enumeration. Unboundedness is
/// decided by enumerating the vertices of the normalized recession cone
/// `{d >= 0 : A d = 0, sum d = 1}`.
pub fn brute_force(lp: &LinearProgram) -> (LpStatus, Option<Rational>) {
    let (rows, cols) = standard_form(lp);
    let cost =
        |x: &[Rational]| -> Rational { lp.objective.iter().zip(x).map(|(c, v)| c * v).sum() };
    let verts = match vertices(rows.clone(), cols) {
        Some(v) if !v.is_empty() => v,
        _ => return (LpStatus::Infeasible, None),
    };
    let mut cone_rows: Vec<Vec<Rational>> = rows
        .iter()
        .map(|r| {
            let mut r = r.clone();
            *r.last_mut().unwrap() = Rational::zero();
            r
        })
        .collect();
    let mut normal = vec![Rational::one(); cols];
    normal.push(Rational::one());
    cone_rows.push(normal);
    let rays = vertices(cone_rows, cols).unwrap_or_default();
    if rays.iter().any(|d| cost(d).is_negative()) {
        return (LpStatus::Unbounded, None);
    }
    let best = verts.iter().map(|x| cost(x)).min().unwrap();
    (LpStatus::Optimal, Some(best))
}

/// Beale's cycling example.
pub fn beale() -> LinearProgram {
    let mut lp = LinearProgram::new(4).minimize(vec![q(-3, 4), q(20, 1), q(-1, 2), q(6, 1)]);
    lp.add_le(vec![q(1, 4), q(-8, 1), q(-1, 1), q(9, 1)], Rational::zero());
    lp.add_le(
        vec![q(1, 2), q(-12, 1), q(-1, 2), q(3, 1)],
        Rational::zero(),
    );
    lp.add_le(vec![q(0, 1), q(0, 1), q(1, 1), q(0, 1)], Rational::one());
    lp
}

/// Kuhn's degenerate example (also cycles under the textbook rule).
pub fn kuhn() -> LinearProgram {
    let mut lp = LinearProgram::new(4).minimize(vec![q(-2, 1), q(-3, 1), q(1, 1), q(12, 1)]);
    lp.add_le(vec![q(-2, 1), q(-9, 1), q(1, 1), q(9, 1)], Rational::zero());
    lp.add_le(vec![q(1, 3), q(1, 1), q(-1, 3), q(-2, 1)], Rational::zero());
    lp.add_le(
        vec![q(2, 1), q(3, 1), q(-1, 1), q(-12, 1)],
        Rational::from(2),
    );
    lp
}
