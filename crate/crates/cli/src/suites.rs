//! Verification suites: each compares closed-form values against independent
//! evaluations and returns one record per comparison.

use l2disc::closedform::*;
use l2disc::discrepancy::*;
use l2disc::numtheory::{fibonacci, gcd};
use l2disc::pointset::*;
use num_traits::{Signed, ToPrimitive};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{bad, CliError, CliResult};
use crate::params::Params;
use crate::record::VerificationRecord;

pub const SUITES: [&str; 10] = [
    "hammersley",
    "lattice",
    "sums",
    "digital_shift",
    "geometric_shift",
    "bilyk",
    "grid",
    "relation",
    "inequalities",
    "one_dim",
];

/// Seed used by randomized suites when none is given.
pub const DEFAULT_SEED: u64 = 1;
pub const DEFAULT_SAMPLES: u64 = 100_000;
pub const DEFAULT_BILYK_K: u64 = 10_000;
/// Largest point count for which the suites run the quadratic pair sums.
const MAX_PAIR_SUM_POINTS: u64 = 1 << 13;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SuiteOptions {
    /// Overrides the tolerance of relative comparisons.
    pub tol_rel: Option<f64>,
    /// Overrides the tolerance of absolute and exact comparisons.
    pub tol_abs: Option<f64>,
    /// Width of Monte Carlo acceptance bands in standard errors.
    pub sigmas: f64,
    pub samples: Option<u64>,
    pub seed: Option<u64>,
    pub k_max: Option<u64>,
}

impl Default for SuiteOptions {
    fn default() -> Self {
        Self {
            tol_rel: None,
            tol_abs: None,
            sigmas: 4.0,
            samples: None,
            seed: None,
            k_max: None,
        }
    }
}

struct Ctx<'a> {
    suite: &'static str,
    params: &'a Params,
    opts: &'a SuiteOptions,
}

impl Ctx<'_> {
    fn rel_tol(&self, default: f64) -> f64 {
        self.opts.tol_rel.unwrap_or(default)
    }

    fn abs_tol(&self, default: f64) -> f64 {
        self.opts.tol_abs.unwrap_or(default)
    }

    fn seed(&self) -> CliResult<u64> {
        Ok(self
            .params
            .value("seed")?
            .or(self.opts.seed)
            .unwrap_or(DEFAULT_SEED))
    }

    fn samples(&self) -> CliResult<u64> {
        Ok(self
            .params
            .value("R")?
            .or(self.opts.samples)
            .unwrap_or(DEFAULT_SAMPLES))
    }

    fn compare(&self, params: String, closed: f64, oracle: f64, tol: f64) -> VerificationRecord {
        VerificationRecord::compare(self.suite, params, closed, oracle, tol)
    }
}

/// Runs the named suite.
pub fn run_suite(
    name: &str,
    params: &Params,
    opts: &SuiteOptions,
) -> CliResult<Vec<VerificationRecord>> {
    let suite = SUITES
        .iter()
        .copied()
        .find(|s| *s == name)
        .ok_or_else(|| CliError::UnknownSuite(name.to_string()))?;
    let ctx = Ctx {
        suite,
        params,
        opts,
    };
    match suite {
        "hammersley" => hammersley_suite(&ctx),
        "lattice" => lattice_suite(&ctx),
        "sums" => sums_suite(&ctx),
        "digital_shift" => digital_shift_suite(&ctx),
        "geometric_shift" => geometric_shift_suite(&ctx),
        "bilyk" => bilyk_suite(&ctx),
        "grid" => grid_suite(&ctx),
        "relation" => relation_suite(&ctx),
        "inequalities" => inequalities_suite(&ctx),
        "one_dim" => one_dim_suite(&ctx),
        _ => unreachable!("suite list and dispatch agree"),
    }
}

fn pair_sums(p: &PointSet) -> CliResult<[f64; 3]> {
    Ok([l2_standard_sq(p)?, l2_extreme_sq(p)?, l2_periodic_sq(p)?])
}

fn check_size(n: u64) -> CliResult<()> {
    if n > MAX_PAIR_SUM_POINTS {
        return Err(bad(format!(
            "{n} points exceed the suite limit of {MAX_PAIR_SUM_POINTS}"
        )));
    }
    Ok(())
}

fn hammersley_suite(ctx: &Ctx) -> CliResult<Vec<VerificationRecord>> {
    let mut out = Vec::new();
    for m in ctx.params.range_or::<u32>("m", 0, 10)? {
        check_size(1u64.checked_shl(m).unwrap_or(u64::MAX))?;
        let got = pair_sums(&hammersley(m)?)?;
        let want = [
            hammersley_standard_sq(m),
            hammersley_extreme_sq(m),
            hammersley_periodic_sq(m),
        ];
        let tol = ctx.rel_tol(if m >= 13 { 1e-6 } else { 1e-9 });
        for ((kind, g), w) in DiscrepancyKind::ALL.iter().zip(got).zip(want) {
            out.push(ctx.compare(format!("m={m},kind={kind}"), w, g, tol));
        }
    }
    Ok(out)
}

/// `(F_{n-1} mod F_n, F_n)`.
pub fn fibonacci_generator(n: u32) -> CliResult<(i64, i64)> {
    let q = fibonacci(n)? as i64;
    let p = if n == 0 {
        1
    } else {
        fibonacci(n - 1)? as i64 % q
    };
    Ok((p, q))
}

/// `count` coprime pairs `1 <= p < q`, `2 <= q <= q_max`, from a seeded stream.
pub fn random_coprime_pairs(count: usize, q_max: i64, seed: u64) -> CliResult<Vec<(i64, i64)>> {
    if q_max < 2 {
        return Err(bad("q_max must be at least 2"));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let q = rng.gen_range(2..=q_max);
        let p = rng.gen_range(1..q);
        if gcd(p, q) == 1 {
            out.push((p, q));
        }
    }
    Ok(out)
}

fn lattice_generators(ctx: &Ctx) -> CliResult<Vec<(i64, i64)>> {
    let p = ctx.params;
    if p.contains("q") {
        return Ok(vec![(p.require("p")?, p.require("q")?)]);
    }
    if let Some(count) = p.value::<usize>("random")? {
        return random_coprime_pairs(count, p.value_or("q_max", 1000)?, ctx.seed()?);
    }
    p.range_or::<u32>("n", 0, 16)?
        .into_iter()
        .map(fibonacci_generator)
        .collect()
}

fn lattice_suite(ctx: &Ctx) -> CliResult<Vec<VerificationRecord>> {
    let tol = ctx.rel_tol(1e-9);
    let mut out = Vec::new();
    for (p, q) in lattice_generators(ctx)? {
        check_size(q.unsigned_abs())?;
        let f = lattice_closed_form(p, q)?;
        let got = pair_sums(&rational_lattice(p, q)?)?;
        let want = [f.standard_sq, f.extreme_sq, f.periodic_sq];
        for ((kind, g), w) in DiscrepancyKind::ALL.iter().zip(got).zip(want) {
            out.push(ctx.compare(format!("p={p},q={q},kind={kind}"), w, g, tol));
        }
    }
    Ok(out)
}

fn sums_suite(ctx: &Ctx) -> CliResult<Vec<VerificationRecord>> {
    let tol = ctx.abs_tol(0.0);
    let mut out = Vec::new();
    for m in ctx.params.range_or::<u32>("m", 0, 10)? {
        let closed = hammersley_sums(m);
        let direct = direct_hammersley_sums(m)?;
        for (i, (a, b)) in closed.as_array().iter().zip(direct.as_array()).enumerate() {
            let diff = (*a - b).abs().to_f64().unwrap_or(f64::INFINITY);
            out.push(VerificationRecord::with_residual(
                ctx.suite,
                format!("m={m},sum=s{}", i + 1),
                a.to_f64().unwrap_or(f64::NAN),
                b.to_f64().unwrap_or(f64::NAN),
                diff,
                tol,
            ));
        }
    }
    Ok(out)
}

fn digital_shift_suite(ctx: &Ctx) -> CliResult<Vec<VerificationRecord>> {
    let m: u32 = ctx.params.value_or("m", 4)?;
    let w: u32 = ctx.params.value_or("w", 64)?;
    let target = if w == m {
        hammersley_digital_mean_sq_mbit(m)
    } else if w >= 32 {
        hammersley_digital_mean_sq(m)
    } else {
        return Err(bad(format!(
            "the mean is known for w = m or w >= 32 digits, got m = {m}, w = {w}"
        )));
    };
    let (r, seed) = (ctx.samples()?, ctx.seed()?);
    let mut out = Vec::new();
    if w > 0 {
        let avg = shift_average_digital(&hammersley(m)?, r, w, seed)?;
        out.push(VerificationRecord::compare(
            ctx.suite,
            format!("m={m},w={w},R={r},seed={seed}"),
            target,
            avg.mean,
            ctx.opts.sigmas * avg.stderr,
        ));
    }
    if 2 * m <= 20 {
        let tol = ctx.abs_tol(1e-12);
        let exhaustive = if m == 0 {
            l2_standard_sq(&hammersley(0)?)?
        } else {
            digital_shift_average_exhaustive(&hammersley(m)?, m)?
        };
        out.push(ctx.compare(
            format!("m={m},w={m},exhaustive"),
            hammersley_digital_mean_sq_mbit(m),
            exhaustive,
            tol,
        ));
    }
    Ok(out)
}

fn geometric_shift_suite(ctx: &Ctx) -> CliResult<Vec<VerificationRecord>> {
    let p = ctx.params;
    let mut sets = Vec::new();
    match p.get("set") {
        Some("hammersley") => {
            let m = p.value_or("m", 3)?;
            sets.push((
                format!("set=hammersley,m={m}"),
                hammersley(m)?,
                hammersley_periodic_sq(m),
            ));
        }
        Some("fibonacci") => {
            let (gp, q) = fibonacci_generator(p.value_or("n", 5)?)?;
            sets.push((
                format!("set=lattice,p={gp},q={q}"),
                rational_lattice(gp, q)?,
                lattice_closed_form(gp, q)?.periodic_sq,
            ));
        }
        Some("lattice") => {
            let (gp, q) = (p.require("p")?, p.require("q")?);
            sets.push((
                format!("set=lattice,p={gp},q={q}"),
                rational_lattice(gp, q)?,
                lattice_closed_form(gp, q)?.periodic_sq,
            ));
        }
        None => {
            sets.push((
                "set=hammersley,m=3".into(),
                hammersley(3)?,
                hammersley_periodic_sq(3),
            ));
            let (gp, q) = fibonacci_generator(5)?;
            sets.push((
                format!("set=lattice,p={gp},q={q}"),
                rational_lattice(gp, q)?,
                lattice_closed_form(gp, q)?.periodic_sq,
            ));
        }
        Some(other) => return Err(bad(format!("unknown set '{other}'"))),
    }
    let (r, seed) = (ctx.samples()?, ctx.seed()?);
    sets.into_iter()
        .map(|(label, set, target)| {
            let avg = shift_average_geometric(&set, r, seed)?;
            Ok(VerificationRecord::compare(
                ctx.suite,
                format!("{label},R={r},seed={seed}"),
                target,
                avg.mean,
                ctx.opts.sigmas * avg.stderr,
            ))
        })
        .collect()
}

fn bilyk_suite(ctx: &Ctx) -> CliResult<Vec<VerificationRecord>> {
    let k = ctx
        .params
        .value("K")?
        .or(ctx.opts.k_max)
        .unwrap_or(DEFAULT_BILYK_K);
    let pairs = if ctx.params.contains("q") {
        vec![(ctx.params.require("p")?, ctx.params.require("q")?)]
    } else {
        vec![(3, 5), (8, 13), (1, 2)]
    };
    pairs
        .into_iter()
        .map(|(p, q)| {
            let b = bilyk_identity(p, q, k)?;
            Ok(VerificationRecord::compare(
                ctx.suite,
                format!("p={p},q={q},K={k}"),
                b.rhs,
                b.lhs_truncated,
                b.tail_bound,
            ))
        })
        .collect()
}

fn grid_suite(ctx: &Ctx) -> CliResult<Vec<VerificationRecord>> {
    let tol = ctx.rel_tol(1e-9);
    let mut out = Vec::new();
    for d in ctx.params.range_or::<u32>("d", 1, 2)? {
        for m in ctx.params.range_or::<u64>("m", 1, 10)? {
            check_size(m.checked_pow(d).unwrap_or(u64::MAX))?;
            let g = regular_grid(m, d as usize)?;
            out.push(ctx.compare(
                format!("m={m},d={d},kind=periodic"),
                grid_periodic_sq(m, d)?,
                l2_periodic_sq(&g)?,
                tol,
            ));
            out.push(ctx.compare(
                format!("m={m},d={d},kind=extreme"),
                grid_extreme_sq(m, d)?,
                l2_extreme_sq(&g)?,
                tol,
            ));
        }
    }
    Ok(out)
}

fn relation_suite(ctx: &Ctx) -> CliResult<Vec<VerificationRecord>> {
    let tol = ctx.abs_tol(1e-12);
    let families: Vec<&str> = match ctx.params.get("set") {
        Some(s) => vec![s],
        None => vec!["hammersley", "lattice", "grid"],
    };
    let mut out = Vec::new();
    for family in families {
        match family {
            "hammersley" => {
                for m in ctx.params.range_or::<u32>("m", 0, 12)? {
                    let res = relation_residual_exact(
                        &hammersley_periodic_sq_exact(m),
                        &hammersley_extreme_sq_exact(m),
                        1 << m,
                    );
                    let res = res.to_f64().unwrap_or(f64::NAN);
                    out.push(ctx.compare(format!("set=hammersley,m={m}"), 0.0, res, tol));
                }
            }
            "lattice" => {
                for (p, q) in lattice_generators(ctx)? {
                    let f = lattice_closed_form(p, q)?;
                    let res = relation_residual(f.periodic_sq, f.extreme_sq, q as u64);
                    out.push(ctx.compare(format!("set=lattice,p={p},q={q}"), 0.0, res, tol));
                }
            }
            "grid" => {
                let d: u32 = ctx.params.value_or("d", 2)?;
                for m in ctx.params.range_or::<u64>("m", 2, 10)? {
                    let res = relation_residual_exact(
                        &grid_periodic_sq_exact(m, d)?,
                        &grid_extreme_sq_exact(m, d)?,
                        m.checked_pow(d).ok_or_else(|| bad("grid too large"))?,
                    );
                    let res = res.to_f64().unwrap_or(f64::NAN);
                    let rec = ctx.compare(format!("set=grid,m={m},d={d}"), 0.0, res, tol);
                    out.push(if m >= 2 { rec.expect_fail() } else { rec });
                }
            }
            other => return Err(bad(format!("unknown set '{other}'"))),
        }
    }
    Ok(out)
}

/// A record measuring how far `lhs <= rhs` is violated.
fn at_most(ctx: &Ctx, params: String, lhs: f64, rhs: f64, tol: f64) -> VerificationRecord {
    VerificationRecord::with_residual(ctx.suite, params, rhs, lhs, (lhs - rhs).max(0.0), tol)
}

fn inequalities_suite(ctx: &Ctx) -> CliResult<Vec<VerificationRecord>> {
    let count: u64 = ctx.params.value_or("count", 200)?;
    let n_max: usize = ctx.params.value_or("n_max", 64)?;
    if n_max == 0 {
        return Err(bad("n_max must be positive"));
    }
    let seed = ctx.seed()?;
    let (abs_tol, rel_tol) = (ctx.abs_tol(1e-12), ctx.rel_tol(1e-12));
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::new();
    for i in 0..count {
        let d = 1 + (i % 3) as usize;
        let n = rng.gen_range(1..=n_max);
        let set = random_pointset(n, d, rng.gen())?;
        let [std, extr, per] = pair_sums(&set)?;
        let label = format!("set={i},d={d},N={n}");
        out.push(at_most(
            ctx,
            format!("{label},check=extreme<=standard"),
            extr,
            std,
            abs_tol,
        ));
        out.push(at_most(
            ctx,
            format!("{label},check=extreme<=periodic"),
            extr,
            per,
            abs_tol,
        ));
        if d == 1 {
            out.push(ctx.compare(
                format!("{label},check=periodic=2*extreme"),
                2.0 * extr,
                per,
                rel_tol,
            ));
            out.push(at_most(
                ctx,
                format!("{label},check=periodic<=2*standard"),
                per,
                2.0 * std,
                abs_tol,
            ));
        }
    }
    for i in 0..count / 4 {
        let half = rng.gen_range(1..=n_max.div_ceil(2));
        let mut coords = Vec::with_capacity(2 * half);
        while coords.len() < 2 * half {
            let x: f64 = rng.gen();
            if x > 0.0 {
                coords.push(x);
                coords.push(1.0 - x);
            }
        }
        let set = PointSet::new(1, coords)?;
        let [std, _, per] = pair_sums(&set)?;
        out.push(ctx.compare(
            format!("symmetric={i},N={},check=periodic=2*standard", 2 * half),
            2.0 * std,
            per,
            rel_tol,
        ));
    }
    Ok(out)
}

fn one_dim_suite(ctx: &Ctx) -> CliResult<Vec<VerificationRecord>> {
    let tol = ctx.rel_tol(1e-12);
    let count: u64 = ctx.params.value_or("count", 50)?;
    let n_max: usize = ctx.params.value_or("n_max", 64)?;
    if n_max == 0 {
        return Err(bad("n_max must be positive"));
    }
    let mut out = Vec::new();
    let halves = PointSet::new(1, vec![0.0, 0.5])?;
    out.push(ctx.compare(
        "set=halves,kind=extreme".into(),
        1.0 / 12.0,
        l2_extreme_sq_1d(&halves)?,
        tol,
    ));
    out.push(ctx.compare(
        "set=halves,kind=periodic".into(),
        1.0 / 6.0,
        l2_periodic_sq_1d(&halves)?,
        tol,
    ));
    let single = PointSet::new(1, vec![0.3])?;
    out.push(ctx.compare(
        "set=single,kind=extreme".into(),
        1.0 / 12.0,
        l2_extreme_sq_1d(&single)?,
        tol,
    ));
    out.push(ctx.compare(
        "set=single,kind=periodic".into(),
        1.0 / 6.0,
        l2_periodic_sq_1d(&single)?,
        tol,
    ));
    let mut rng = ChaCha8Rng::seed_from_u64(ctx.seed()?);
    for i in 0..count {
        let n = rng.gen_range(1..=n_max);
        let set = random_pointset(n, 1, rng.gen())?;
        out.push(ctx.compare(
            format!("set={i},N={n},kind=extreme"),
            l2_extreme_sq_1d(&set)?,
            l2_extreme_sq(&set)?,
            tol,
        ));
        out.push(ctx.compare(
            format!("set={i},N={n},kind=periodic"),
            l2_periodic_sq_1d(&set)?,
            l2_periodic_sq(&set)?,
            tol,
        ));
    }
    Ok(out)
}
