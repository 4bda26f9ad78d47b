use std::fmt::Write as _;
use std::path::Path;

use anyhow::{anyhow, bail, Result};
use thermo_core::{
    convertible_lp, gibbs_from_hamiltonian, lift_threshold, lift_to_thermal_map, lorenz_curve,
    work_gain_lp, CriterionRegistry, Error, Hamiltonian, MonotoneRegistry, Rational, Real,
    ResourceState, Value,
};

use crate::input::{ResourceFile, DEFAULT_PRECISION};

/// Digits after the point for every decimal rendering.
pub const DECIMALS: u32 = 15;

pub const EXIT_OK: u8 = 0;
pub const EXIT_NOT_CONVERTIBLE: u8 = 3;
pub const EXIT_DISAGREEMENT: u8 = 4;

/// What a command prints and the exit code it asks for.
pub struct Report {
    pub text: String,
    pub code: u8,
}

impl Report {
    fn ok(text: String) -> Self {
        Report {
            text,
            code: EXIT_OK,
        }
    }
}

fn matrix(out: &mut String, rows: &[Vec<Rational>]) {
    for row in rows {
        let cells: Vec<String> = row.iter().map(Rational::to_string).collect();
        writeln!(out, "  {}", cells.join("\t")).unwrap();
    }
}

fn vector(v: &[Rational]) -> String {
    let cells: Vec<String> = v.iter().map(Rational::to_string).collect();
    format!("({})", cells.join(", "))
}

pub fn check(file: &Path, a: &str, b: &str, witness: bool, criteria: &[String]) -> Result<Report> {
    let rf = ResourceFile::load(file)?;
    let (from, to) = (rf.state(a)?, rf.state(b)?);
    let registry = if criteria.is_empty() {
        CriterionRegistry::standard()
    } else {
        let names: Vec<&str> = criteria.iter().map(String::as_str).collect();
        CriterionRegistry::standard().select(&names)?
    };
    verdict_report(a, b, &from, &to, &registry, witness)
}

fn verdict_report(
    a: &str,
    b: &str,
    from: &ResourceState,
    to: &ResourceState,
    registry: &CriterionRegistry,
    witness: bool,
) -> Result<Report> {
    let verdicts = registry.evaluate(from, to);

    let mut out = String::new();
    writeln!(out, "{a} -> {b}").unwrap();
    for v in &verdicts {
        writeln!(out, "  {:<8} {}", v.criterion, v.convertible).unwrap();
    }
    let first = verdicts.first().map(|v| v.convertible).unwrap_or(false);
    if verdicts.iter().any(|v| v.convertible != first) {
        writeln!(out, "verdict: criteria disagree").unwrap();
        return Ok(Report {
            text: out,
            code: EXIT_DISAGREEMENT,
        });
    }
    writeln!(
        out,
        "verdict: {}",
        if first {
            "convertible"
        } else {
            "not convertible"
        }
    )
    .unwrap();
    if witness {
        match convertible_lp(from, to) {
            (true, Some(g)) => {
                writeln!(out, "witness G ({}x{}):", g.num_rows(), g.num_cols()).unwrap();
                matrix(&mut out, g.rows());
            }
            _ => writeln!(out, "witness G: none").unwrap(),
        }
    }
    Ok(Report {
        text: out,
        code: if first { EXIT_OK } else { EXIT_NOT_CONVERTIBLE },
    })
}

fn decimal(x: &Real) -> String {
    if x.is_zero() {
        "0".to_string()
    } else {
        x.to_decimal(DECIMALS)
    }
}

pub fn work(
    file: &Path,
    a: &str,
    b: &str,
    beta: f64,
    witness: bool,
    epsilon: Option<&str>,
) -> Result<Report> {
    let rf = ResourceFile::load(file)?;
    let (from, to) = (rf.state(a)?, rf.state(b)?);
    let epsilon: Option<Rational> = epsilon
        .map(|s| s.parse().map_err(|e| anyhow!("--epsilon: {e}")))
        .transpose()?;
    let res = work_gain_lp(&from, &to, beta)?;

    let mut out = String::new();
    writeln!(out, "{a} -> {b}").unwrap();
    writeln!(out, "x* = {}", res.x_star).unwrap();
    writeln!(out, "W = {}", decimal(&res.work_gain)).unwrap();
    if witness {
        writeln!(out, "witness F ({}x{}):", to.len(), from.len()).unwrap();
        matrix(&mut out, &res.witness_f);
    }
    if let Some(eps) = epsilon {
        let threshold = lift_threshold(&res, &from, &to)?;
        let map = match lift_to_thermal_map(&res, &from, &to, &eps) {
            Ok(map) => map,
            Err(Error::EpsilonTooLarge { epsilon, threshold }) => {
                bail!("--epsilon {epsilon} is too large: the lift needs epsilon < {threshold}")
            }
            Err(e) => bail!("--epsilon {eps}: {e}"),
        };
        let checks = map.check(&from, &to);
        writeln!(out, "lift at epsilon = {eps}").unwrap();
        match threshold {
            Some(t) => writeln!(out, "  epsilon_max = {t}").unwrap(),
            None => writeln!(out, "  epsilon_max = none (v = 0)").unwrap(),
        }
        writeln!(out, "  y = {}", map.y).unwrap();
        writeln!(out, "  t = {}", map.t).unwrap();
        writeln!(out, "  u = {}", vector(&map.u)).unwrap();
        writeln!(out, "  v = {}", vector(&map.v)).unwrap();
        writeln!(
            out,
            "G ({}x{}):",
            map.matrix.len(),
            map.matrix.first().map_or(0, Vec::len)
        )
        .unwrap();
        matrix(&mut out, &map.matrix);
        let mark = |ok: bool| if ok { "PASS" } else { "FAIL" };
        writeln!(out, "  nonnegative        {}", mark(checks.nonnegative)).unwrap();
        writeln!(out, "  column sums        {}", mark(checks.column_sums)).unwrap();
        writeln!(out, "  resource action    {}", mark(checks.maps_resource)).unwrap();
        writeln!(out, "  Gibbs action       {}", mark(checks.maps_gibbs)).unwrap();
        writeln!(
            out,
            "  partition identity {}",
            mark(checks.z_ratio_identity)
        )
        .unwrap();
        writeln!(out, "verification: {}", mark(checks.all())).unwrap();
    }
    Ok(Report::ok(out))
}

/// TSV of every named curve plus a summary of kink counts.
pub fn lorenz(file: &Path, names: &[String]) -> Result<(String, String)> {
    let rf = ResourceFile::load(file)?;
    let mut names: Vec<&String> = names.iter().collect();
    names.sort();
    names.dedup();

    let mut tsv = String::from("name\tt_exact\tL_exact\tt_decimal\tL_decimal\n");
    let mut summary = String::new();
    for name in names {
        let curve = lorenz_curve(&rf.state(name)?);
        for (t, l) in curve.points() {
            writeln!(
                tsv,
                "{name}\t{t}\t{l}\t{}\t{}",
                t.to_decimal(DECIMALS),
                l.to_decimal(DECIMALS)
            )
            .unwrap();
        }
        writeln!(
            summary,
            "{name}\tbreakpoints={}\tkinks={}",
            curve.points().len(),
            curve.kink_count()
        )
        .unwrap();
    }
    Ok((tsv, summary))
}

pub fn monotone(file: &Path, name: &str, monotones: &[String]) -> Result<Report> {
    let rf = ResourceFile::load(file)?;
    let state = rf.state(name)?;
    let standard = MonotoneRegistry::standard();
    let mut registry = MonotoneRegistry::new();
    if monotones.is_empty() {
        registry = standard;
    } else {
        for m in monotones {
            registry.register(standard.resolve(m)?);
        }
    }

    let mut out = String::from("monotone\texact\tdecimal\n");
    for v in registry.evaluate(&state) {
        let (exact, dec) = match &v.value {
            Value::Exact(q) => (q.to_string(), q.to_decimal(DECIMALS)),
            Value::Approx(x) => ("-".to_string(), x.to_decimal(DECIMALS)),
            Value::Infinite => ("inf".to_string(), "inf".to_string()),
        };
        writeln!(out, "{}\t{exact}\t{dec}", v.name).unwrap();
    }
    Ok(Report::ok(out))
}

pub enum GibbsSource<'a> {
    Hamiltonian {
        levels: Vec<f64>,
        beta: f64,
        precision: Option<u32>,
    },
    File {
        file: &'a Path,
        state: &'a str,
    },
}

pub fn gibbs(source: GibbsSource<'_>) -> Result<Report> {
    let g = match source {
        GibbsSource::Hamiltonian {
            levels,
            beta,
            precision,
        } => {
            let h = Hamiltonian::new(levels, beta, precision.unwrap_or(DEFAULT_PRECISION))?;
            gibbs_from_hamiltonian(&h)?
        }
        GibbsSource::File { file, state } => ResourceFile::load(file)?.state(state)?.g().to_vec(),
    };
    let mut out = String::from("level\tg_exact\tg_decimal\n");
    for (i, w) in g.iter().enumerate() {
        writeln!(out, "{i}\t{w}\t{}", w.to_decimal(DECIMALS)).unwrap();
    }
    Ok(Report::ok(out))
}
