//! Acceptance suite. Runs every criterion, prints one line per criterion and
//! exits non-zero if any fails.

mod common;

use std::process::ExitCode;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thermo_core::lp::{check_solution, solve, LpStatus};
use thermo_core::monotones::{ChiSquare, TotalVariation};
use thermo_core::quasiorder::two_level_resource;
use thermo_core::{
    convertible_lp, f_divergence, hinge_condition_d, hinge_condition_e, lift_threshold,
    lift_to_thermal_map, lorenz_curve, lorenz_dominates, make_resource, relative_entropy,
    renyi_divergence, two_level_kink, work_cost, work_gain_lp, work_value, Rational, Real,
    ResourceState, Value,
};

use common::{q, state, state_pair};

type Outcome = Result<String, String>;
type Runner<'a> = Box<dyn Fn() -> Outcome + 'a>;

const LN2_30: &str = "693147180559945309417232121458";

fn seeded(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn within_time(start: Instant, limit: Duration, detail: String) -> Outcome {
    let elapsed = start.elapsed();
    if elapsed < limit {
        Ok(format!("{detail} in {elapsed:.2?}"))
    } else {
        Err(format!("{detail} but took {elapsed:.2?} (limit {limit:?})"))
    }
}

/// The shared pair sample used by criteria 3, 4 and 6.
fn pair_sample() -> Vec<(ResourceState, ResourceState)> {
    let mut rng = seeded(3);
    (0..600).map(|_| state_pair(&mut rng, 5)).collect()
}

fn landauer() -> Outcome {
    let start = Instant::now();
    let half = q(1, 2);
    let from = make_resource(
        vec![half.clone(), half.clone()],
        vec![half.clone(), half.clone()],
    )
    .unwrap();
    let to = make_resource(
        vec![Rational::one(), Rational::zero()],
        vec![half.clone(), half],
    )
    .unwrap();
    let ln2: Rational = format!("{LN2_30}/1{}", "0".repeat(LN2_30.len()))
        .parse()
        .unwrap();
    let tol = Real::from_rational(&q(1, 2_000_000_000_000));
    for beta in [1.0, 0.5, 2.5] {
        let res = work_gain_lp(&from, &to, beta).map_err(|e| e.to_string())?;
        if res.x_star != Rational::from(2) {
            return Err(format!("beta={beta}: x* = {} (expected 2)", res.x_star));
        }
        let expected = Real::from_rational(&(&ln2 / &Rational::from_f64(beta).unwrap()));
        let cost = res.work_cost();
        if (&cost - &expected).abs() > tol || cost.to_decimal(12) != expected.to_decimal(12) {
            return Err(format!(
                "beta={beta}: W = {} expected {}",
                cost.to_decimal(15),
                expected.to_decimal(15)
            ));
        }
    }
    within_time(
        start,
        Duration::from_secs(1),
        "x* = 2, W = ln2/β to 12 decimals for β ∈ {1, 1/2, 5/2}".into(),
    )
}

fn closed_forms() -> Outcome {
    let start = Instant::now();
    let mut rng = seeded(2);
    let samples = 500;
    for k in 0..samples {
        let n = rng.gen_range(1..=6);
        let r = state(&mut rng, n, 12);
        let trivial = ResourceState::trivial();
        let value: Rational = r
            .p()
            .iter()
            .zip(r.g())
            .filter(|(p, _)| !p.is_zero())
            .map(|(_, g)| g.clone())
            .sum();
        let cost = r.max_ratio();
        let lp_value = work_gain_lp(&r, &trivial, 1.0)
            .map_err(|e| e.to_string())?
            .x_star;
        let lp_cost = work_gain_lp(&trivial, &r, 1.0)
            .map_err(|e| e.to_string())?
            .x_star;
        let cf_value = work_value(&r, 1.0).map_err(|e| e.to_string())?.x_star;
        let cf_cost = work_cost(&r, 1.0).map_err(|e| e.to_string())?.x_star;
        if lp_value != value || cf_value != value {
            return Err(format!(
                "sample {k}: value LP {lp_value}, closed form {cf_value}, oracle {value}"
            ));
        }
        if lp_cost != cost || cf_cost != cost {
            return Err(format!(
                "sample {k}: cost LP {lp_cost}, closed form {cf_cost}, oracle {cost}"
            ));
        }
    }
    within_time(
        start,
        Duration::from_secs(30),
        format!("{samples} states agree exactly"),
    )
}

fn equivalence(sample: &[(ResourceState, ResourceState)]) -> Outcome {
    let start = Instant::now();
    let mut yes = 0;
    for (k, (r, r2)) in sample.iter().enumerate() {
        let (lp, witness) = convertible_lp(r, r2);
        let lor = lorenz_dominates(&lorenz_curve(r), &lorenz_curve(r2));
        let d = hinge_condition_d(r, r2);
        let e = hinge_condition_e(r, r2);
        if !(lp == lor && lor == d && d == e) {
            return Err(format!(
                "pair {k}: lp={lp} lorenz={lor} hinge-d={d} hinge-e={e} for {r:?} -> {r2:?}"
            ));
        }
        if lp {
            yes += 1;
            if !witness.is_some_and(|w| w.witnesses(r, r2)) {
                return Err(format!("pair {k}: LP witness does not map R to R'"));
            }
        }
    }
    within_time(
        start,
        Duration::from_secs(60),
        format!(
            "{} pairs, {yes} convertible, all four criteria agree",
            sample.len()
        ),
    )
}

fn work_consistency(sample: &[(ResourceState, ResourceState)]) -> Outcome {
    for (k, (r, r2)) in sample.iter().enumerate() {
        let res = work_gain_lp(r, r2, 1.0).map_err(|e| e.to_string())?;
        let (convertible, _) = convertible_lp(r, r2);
        if (res.x_star <= Rational::one()) != convertible {
            return Err(format!(
                "pair {k}: x* = {} but convertible = {convertible}",
                res.x_star
            ));
        }
        let bound = &r2.max_ratio() / &r.max_ratio();
        if res.x_star < bound {
            return Err(format!("pair {k}: x* = {} below bound {bound}", res.x_star));
        }
        if !res.witness_is_valid(r, r2) {
            return Err(format!("pair {k}: invalid work witness"));
        }
    }
    Ok(format!(
        "{} pairs: x* <= 1 iff convertible, x* >= max r'/max r",
        sample.len()
    ))
}

fn lift_soundness() -> Outcome {
    let mut rng = seeded(5);
    let mut instances = 0;
    let mut unbounded = 0;
    while instances < 120 {
        let (r, r2) = state_pair(&mut rng, 4);
        let res = work_gain_lp(&r, &r2, 1.0).map_err(|e| e.to_string())?;
        let threshold = lift_threshold(&res, &r, &r2).map_err(|e| e.to_string())?;
        let cap = match threshold {
            Some(t) if t < Rational::one() => t,
            Some(_) => Rational::one(),
            None => {
                unbounded += 1;
                Rational::one()
            }
        };
        for divisor in [2, 10] {
            let eps = &cap / &Rational::from(divisor);
            let map = lift_to_thermal_map(&res, &r, &r2, &eps)
                .map_err(|e| format!("instance {instances}, ε = {eps}: {e}"))?;
            let checks = map.check(&r, &r2);
            if !checks.all() {
                return Err(format!(
                    "instance {instances}, ε = {eps}: failed {:?}",
                    checks.failures()
                ));
            }
            let lhs = &map.t + &(&map.epsilon * &thermo_core::rational::dot(&map.u, r.g()));
            let one = Rational::one();
            let rhs = &(&one + &map.epsilon) / &(&one + &(&map.epsilon * &map.y));
            if lhs != rhs {
                return Err(format!(
                    "instance {instances}: t + εuᵀg = {lhs}, expected {rhs}"
                ));
            }
            let col_ok = (0..map.matrix[0].len()).all(|j| {
                map.matrix
                    .iter()
                    .map(|row| row[j].clone())
                    .sum::<Rational>()
                    .is_one()
            });
            let nonneg = map.matrix.iter().flatten().all(|x| !x.is_negative());
            let mut input = vec![Rational::zero(); r.len()];
            input.extend(r.p().iter().cloned());
            let mut output = vec![Rational::zero(); r2.len()];
            output.extend(r2.p().iter().cloned());
            if !col_ok || !nonneg || map.apply(&input) != output {
                return Err(format!("instance {instances}: direct matrix checks failed"));
            }
        }
        instances += 1;
    }
    Ok(format!("{instances} instances at ε_max/2 and ε_max/10 ({unbounded} with no finite ε_max, capped at 1)"))
}

fn monotone_screening(sample: &[(ResourceState, ResourceState)]) -> Outcome {
    let tol = Real::from_rational(&q(1, 1_000_000_000_000));
    let zero = Real::zero();
    let mut checked = 0;
    for (k, (r, r2)) in sample.iter().enumerate() {
        if !convertible_lp(r, r2).0 {
            continue;
        }
        checked += 1;
        for f in [
            &TotalVariation as &dyn thermo_core::ConvexFunction,
            &ChiSquare,
        ] {
            let (a, b) = (f_divergence(r, f), f_divergence(r2, f));
            if !matches!((&a.value, &b.value), (Value::Exact(_), Value::Exact(_)))
                || !a.non_increasing_to(&b, &zero)
            {
                return Err(format!(
                    "pair {k}: {} went {:?} -> {:?}",
                    a.name, a.value, b.value
                ));
            }
        }
        let mut approx = vec![(relative_entropy(r, false), relative_entropy(r2, false))];
        for alpha in [q(0, 1), q(1, 2), q(2, 1)] {
            approx.push((
                renyi_divergence(r, &alpha).map_err(|e| e.to_string())?,
                renyi_divergence(r2, &alpha).map_err(|e| e.to_string())?,
            ));
        }
        for (a, b) in approx {
            if !a.non_increasing_to(&b, &tol) {
                return Err(format!(
                    "pair {k}: {} went {:?} -> {:?}",
                    a.name, a.value, b.value
                ));
            }
        }
    }
    Ok(format!(
        "{checked} convertible pairs: TV, χ² exact; D, D_0, D_1/2, D_2 within 1e-12"
    ))
}

fn kinks() -> Outcome {
    let mut rng = seeded(7);
    let mut done = 0;
    while done < 50 {
        let gp = q(rng.gen_range(1..=40), rng.gen_range(1..=12));
        let sp = if rng.gen_ratio(1, 10) {
            Rational::zero()
        } else {
            q(rng.gen_range(1..=40), rng.gen_range(1..=12))
        };
        if gp == sp {
            continue;
        }
        let (t, l) = two_level_kink(&gp, &sp).map_err(|e| e.to_string())?;
        let r = two_level_resource(&gp, &sp).map_err(|e| e.to_string())?;
        let curve = lorenz_curve(&r);
        let interior = curve.points().iter().any(|pt| pt.0 == t && pt.1 == l);
        if !curve.contains(&t, &l) || !interior {
            return Err(format!(
                "proxies ({gp}, {sp}): kink ({t}, {l}) not a vertex of {:?}",
                curve.points()
            ));
        }
        done += 1;
    }
    Ok(format!(
        "{done} proxy pairs, kink is an exact vertex of the Lorenz curve"
    ))
}

fn lp_oracle() -> Outcome {
    let mut rng = seeded(8);
    let mut counts = [0usize; 3];
    let samples = 300;
    for k in 0..samples {
        let lp = common::small_lp(&mut rng);
        let sol = solve(&lp).map_err(|e| e.to_string())?;
        let (status, optimum) = common::brute_force(&lp);
        if sol.status != status
            || (status == LpStatus::Optimal && sol.optimum.as_ref() != optimum.as_ref())
        {
            return Err(format!(
                "LP {k}: simplex {:?}/{:?}, oracle {status:?}/{optimum:?}",
                sol.status, sol.optimum
            ));
        }
        if !check_solution(&lp, &sol) {
            return Err(format!("LP {k}: certificate does not check"));
        }
        counts[match status {
            LpStatus::Optimal => 0,
            LpStatus::Infeasible => 1,
            LpStatus::Unbounded => 2,
        }] += 1;
    }
    for (name, lp, expected) in [
        ("Beale", common::beale(), q(-5, 4)),
        ("Kuhn", common::kuhn(), q(-2, 1)),
    ] {
        let start = Instant::now();
        let sol = solve(&lp).map_err(|e| e.to_string())?;
        let (_, oracle) = common::brute_force(&lp);
        if sol.optimum.as_ref() != Some(&expected) || oracle.as_ref() != Some(&expected) {
            return Err(format!(
                "{name}: simplex {:?}, oracle {oracle:?}, expected {expected}",
                sol.optimum
            ));
        }
        if start.elapsed() > Duration::from_secs(1) {
            return Err(format!("{name}: took {:?}", start.elapsed()));
        }
    }
    Ok(format!(
        "{samples} LPs ({} optimal, {} infeasible, {} unbounded) match; Beale and Kuhn terminate",
        counts[0], counts[1], counts[2]
    ))
}

fn main() -> ExitCode {
    let sample = pair_sample();
    let criteria: Vec<(&str, Runner)> = vec![
        ("1 landauer", Box::new(landauer)),
        ("2 closed-forms", Box::new(closed_forms)),
        ("3 criteria-equivalence", Box::new(|| equivalence(&sample))),
        (
            "4 order-work-consistency",
            Box::new(|| work_consistency(&sample)),
        ),
        ("5 lift-soundness", Box::new(lift_soundness)),
        (
            "6 monotone-screening",
            Box::new(|| monotone_screening(&sample)),
        ),
        ("7 two-level-kink", Box::new(kinks)),
        ("8 lp-oracle", Box::new(lp_oracle)),
    ];
    let mut failed = 0;
    for (name, run) in &criteria {
        match run() {
            Ok(detail) => println!("PASS  {name:<26} {detail}"),
            Err(detail) => {
                failed += 1;
                println!("FAIL  {name:<26} {detail}");
            }
        }
    }
    println!(
        "acceptance: {} passed, {failed} failed",
        criteria.len() - failed
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
