use std::fs;
use std::path::Path;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use rayon::prelude::*;

use smallvol::cohomology::{delta_genus, h0};
use smallvol::covers::{
    cover_spec, geometric_genus_formula, h0_even_parity_check, nested_sum_h0, slope_coefficients,
    slope_limit_table, slope_report_with, volume_formula, volume_via_plurigenera, ClosedForms, CoverSpec,
    IdentityCheck,
};
use smallvol::format::{parse_divisor, parse_divisor_list, parse_tower_file};
use smallvol::wps::{product_with_curve, wh_invariants};
use smallvol::{DivisorClass, Error, TowerSpec, WeightedHypersurface, Q};

use crate::grid::Grid;
use crate::table::{render_all, Table};
use crate::{Diagnostic, Fault, InputError, Options, Output, MAX_DIM, MAX_MULTIPLE};

type CmdResult = Result<Output, InputError>;

fn ok(text: String) -> CmdResult {
    Ok(Output {
        text,
        diagnostics: Vec::new(),
    })
}

fn load_tower(path: &Path, opts: &Options) -> Result<TowerSpec, InputError> {
    let text = fs::read_to_string(path).map_err(|e| InputError(format!("cannot read {}: {e}", path.display())))?;
    let tower = parse_tower_file(&text).map_err(|e| InputError(format!("{}: {e}", path.display())))?;
    check_dim(tower.dim(), opts)?;
    Ok(tower)
}

fn check_dim(dim: usize, opts: &Options) -> Result<(), InputError> {
    if dim > MAX_DIM && !opts.no_limits {
        return Err(InputError(format!(
            "dimension {dim} exceeds the default cap of {MAX_DIM}; pass --no-limits to proceed"
        )));
    }
    Ok(())
}

fn check_multiple(flag: &str, m: u32, opts: &Options) -> Result<(), InputError> {
    if m > MAX_MULTIPLE && !opts.no_limits {
        return Err(InputError(format!(
            "{flag} {m} exceeds the default cap of {MAX_MULTIPLE}; pass --no-limits to proceed"
        )));
    }
    Ok(())
}

// Divisor literals are single-line, so only the column is meaningful.
fn literal_error(flag: &str, literal: &str, e: Error) -> InputError {
    match e {
        Error::Parse { column, message, .. } => InputError(format!("{flag} `{literal}`: column {column}: {message}")),
        other => InputError(format!("{flag} `{literal}`: {other}")),
    }
}

fn parse_class(flag: &str, literal: &str, tower: &TowerSpec) -> Result<DivisorClass, InputError> {
    let class = parse_divisor(literal).map_err(|e| literal_error(flag, literal, e))?;
    if class.len() != tower.dim() {
        return Err(InputError(format!(
            "{flag} `{literal}` has {} entries but the tower has dimension {}",
            class.len(),
            tower.dim()
        )));
    }
    Ok(class)
}

fn slope_text(a: &Q, b: &Q) -> String {
    if b.is_negative() {
        format!("{a} p_g + {}", -b)
    } else {
        format!("{a} p_g - {b}")
    }
}

fn diagnostics_of<'a>(prefix: &str, checks: impl IntoIterator<Item = &'a IdentityCheck>) -> Vec<Diagnostic> {
    checks
        .into_iter()
        .filter(|c| !c.passed)
        .map(|c| Diagnostic {
            name: format!("{prefix}{}", c.name),
            expected: c.expected.clone(),
            actual: c.actual.clone(),
        })
        .collect()
}

pub(crate) fn tower(opts: &Options, spec: &Path) -> CmdResult {
    let tower = load_tower(spec, opts)?;
    let d = tower.dim();
    let mut t = Table::new(["quantity", "value"]);
    t.push(["dim".to_string(), d.to_string()]);
    t.push(["-K".to_string(), tower.anticanonical_class().to_string()]);
    t.push(["K".to_string(), tower.canonical_class().to_string()]);
    for i in 1..d {
        t.push([format!("L_{i}"), tower.twisting_class(i)?.to_string()]);
    }
    let top = tower.top_class()?;
    t.push([format!("L_{d}"), top.to_string()]);
    t.push([format!("L_{d}^{d}"), tower.self_intersection(&top)?.to_string()]);
    t.push([format!("h0(L_{d})"), h0(&tower, &top)?.to_string()]);
    t.push([format!("delta(L_{d})"), delta_genus(&tower, &top)?.to_string()]);
    ok(render_all(&[t], opts.format))
}

pub(crate) fn sections(opts: &Options, spec: &Path, literal: &str, multiples: Option<u32>) -> CmdResult {
    let tower = load_tower(spec, opts)?;
    let class = parse_class("--divisor", literal, &tower)?;
    if !class.is_integral() {
        return Err(InputError(format!("--divisor `{literal}` is not integral")));
    }
    let Some(max_m) = multiples else {
        return ok(format!("{}\n", h0(&tower, &class)?));
    };
    check_multiple("--multiples", max_m, opts)?;
    let mut t = Table::new(["m", "h0"]);
    for m in 1..=max_m {
        t.push([m.to_string(), h0(&tower, &class.scale_int(m as i64))?.to_string()]);
    }
    ok(render_all(&[t], opts.format))
}

pub(crate) fn intersect(spec: &Path, literal: &str) -> CmdResult {
    let opts = Options {
        format: Default::default(),
        no_limits: true,
    };
    let tower = load_tower(spec, &opts)?;
    let classes = parse_divisor_list(literal).map_err(|e| literal_error("--classes", literal, e))?;
    if classes.len() != tower.dim() {
        return Err(InputError(format!(
            "--classes `{literal}` lists {} classes but the tower has dimension {}",
            classes.len(),
            tower.dim()
        )));
    }
    for (i, c) in classes.iter().enumerate() {
        if c.len() != tower.dim() {
            return Err(InputError(format!(
                "--classes `{literal}`: class {} `{c}` has {} entries, expected {}",
                i + 1,
                c.len(),
                tower.dim()
            )));
        }
    }
    ok(format!("{}\n", tower.intersection_number(&classes)?))
}

pub(crate) fn example(opts: &Options, n: usize, e: i64, k: usize, pluri: Option<u32>, second: bool) -> CmdResult {
    if second && k == 0 {
        return Err(InputError("--k must be at least 1 for example-b; use example-a for k = 0".into()));
    }
    let cover = cover_spec(n, e, k)?;
    check_dim(cover.dim(), opts)?;
    let pluri = pluri.unwrap_or(0);
    check_multiple("--pluri", pluri, opts)?;
    let report = slope_report_with(&cover, pluri, &ClosedForms::default())?;

    let mut summary = Table::new(["quantity", "value"]).titled(if second {
        format!("Second family, n = {n}, e = {e}, k = {k}")
    } else {
        format!("First family, n = {n}, e = {e}")
    });
    summary.push(["n".to_string(), n.to_string()]);
    summary.push(["e".to_string(), e.to_string()]);
    summary.push(["k".to_string(), k.to_string()]);
    summary.push(["dim X (= n + k + 1)".to_string(), report.dim.to_string()]);
    summary.push(["p_g".to_string(), report.p_g.to_string()]);
    summary.push(["Vol".to_string(), report.volume.to_string()]);
    summary.push(["slope".to_string(), slope_text(&report.slope_a, &report.slope_b)]);
    summary.push(["d1 (canonical image)".to_string(), report.d1.to_string()]);
    summary.push(["delta(Y_n, L_n)".to_string(), report.delta_genus_of_ln.to_string()]);
    summary.push(["-K_W".to_string(), cover.tower.anticanonical_class().to_string()]);
    summary.push(["K_W".to_string(), cover.tower.canonical_class().to_string()]);
    summary.push(["B".to_string(), cover.half_branch.to_string()]);
    summary.push(["T".to_string(), cover.free_branch.to_string()]);
    summary.push(["N".to_string(), cover.canonical.to_string()]);
    summary.push(["H".to_string(), cover.reduced_canonical.to_string()]);
    for (m, p) in &report.plurigenera {
        summary.push([format!("P_{m}"), p.to_string()]);
    }

    let mut checks = Table::new(["check", "expected", "actual", "status"]).titled("Checks");
    for c in &report.identity_checks {
        checks.push([
            c.name.clone(),
            c.expected.clone(),
            c.actual.clone(),
            status(c.passed).to_string(),
        ]);
    }
    Ok(Output {
        text: render_all(&[summary, checks], opts.format),
        diagnostics: diagnostics_of("", &report.identity_checks),
    })
}

fn status(passed: bool) -> &'static str {
    if passed {
        "ok"
    } else {
        "FAILED"
    }
}

fn off_by_one_genus(n: usize, e: i64) -> BigInt {
    geometric_genus_formula(n, e) + 1
}

fn off_by_one_volume(n: usize, e: i64, k: usize) -> Q {
    volume_formula(n, e, k) + Q::one()
}

fn off_by_one_slope(n: usize, k: usize) -> (Q, Q) {
    let (a, b) = slope_coefficients(n, k);
    (a, b + Q::one())
}

fn closed_forms(fault: Option<Fault>) -> ClosedForms {
    let mut forms = ClosedForms::default();
    match fault {
        Some(Fault::Genus) => forms.geometric_genus = off_by_one_genus,
        Some(Fault::Volume) => forms.volume = off_by_one_volume,
        Some(Fault::Slope) => forms.slope = off_by_one_slope,
        None => {}
    }
    forms
}

struct PointResult {
    n: usize,
    e: i64,
    k: usize,
    dim: usize,
    p_g: u128,
    volume: Q,
    slope: (Q, Q),
    checks: Vec<IdentityCheck>,
}

// Plurigenus sweeps are limited to covers of dimension at most 5.
const PLURI_MAX_DIM: usize = 5;

fn verify_point(n: usize, e: i64, k: usize, max_m: u32, forms: &ClosedForms) -> Result<PointResult, Error> {
    let cover = cover_spec(n, e, k)?;
    let report = slope_report_with(&cover, 0, forms)?;
    let mut checks = report.identity_checks;
    let d = cover.dim();
    if d <= PLURI_MAX_DIM {
        for m in (2..=max_m).step_by(2) {
            let holds = h0_even_parity_check(&cover, m)?;
            checks.push(IdentityCheck::holds(
                &format!("h0({m}N) = h0({m}H)"),
                "equal",
                if holds { "equal" } else { "different" }.to_string(),
                holds,
            ));
        }
        if k >= 1 {
            push_nested_checks(&cover, max_m.min(6), &mut checks)?;
        }
    }
    if n == 2 && e <= 3 && k <= 1 {
        push_pluri_volume_check(&cover, &report.volume, &mut checks)?;
    }
    Ok(PointResult {
        n,
        e,
        k,
        dim: d,
        p_g: report.p_g,
        volume: report.volume,
        slope: (report.slope_a, report.slope_b),
        checks,
    })
}

fn push_nested_checks(cover: &CoverSpec, max_m: u32, checks: &mut Vec<IdentityCheck>) -> Result<(), Error> {
    for m in (2..=max_m).step_by(2) {
        let direct = h0(&cover.tower, &cover.canonical.scale_int(m as i64))?;
        let full = nested_sum_h0(cover, m, false)?;
        let half = nested_sum_h0(cover, m, true)?;
        checks.push(IdentityCheck::equal(&format!("nested sum (M = m) = h0({m}N)"), &direct, &full));
        checks.push(IdentityCheck::equal(&format!("nested sum (M = m/2) = h0({m}N)"), &direct, &half));
    }
    Ok(())
}

fn push_pluri_volume_check(cover: &CoverSpec, volume: &Q, checks: &mut Vec<IdentityCheck>) -> Result<(), Error> {
    let pv = volume_via_plurigenera(cover, cover.dim() as u32 + 3)?;
    let actual = pv.implied_volume.map_or_else(|| "unstable".to_string(), |v| v.to_string());
    checks.push(IdentityCheck::holds(
        "Vol from P_2t differences",
        &volume.to_string(),
        actual.clone(),
        actual == volume.to_string(),
    ));
    Ok(())
}

fn base_checks(n: usize, e: i64) -> Result<Vec<IdentityCheck>, Error> {
    let y = smallvol::covers::example_tower_y(n, e)?;
    let l = y.top_class()?;
    let mut checks = vec![
        IdentityCheck::equal("L_n^n = e", &Q::from_integer(e.into()), &y.self_intersection(&l)?),
        IdentityCheck::equal("h0(L_n) = e + n", &((e + n as i64) as u128), &h0(&y, &l)?),
        IdentityCheck::equal("delta(L_n) = 0", &BigInt::zero(), &delta_genus(&y, &l)?),
    ];
    for i in 1..=n {
        let mut classes = vec![l.clone(); n - 1];
        classes.push(y.section(i)?);
        let expected = if i == 1 { Q::one() } else { Q::zero() };
        checks.push(IdentityCheck::equal(
            &format!("L_n^(n-1) S{i}"),
            &expected,
            &y.intersection_number(&classes)?,
        ));
    }
    Ok(checks)
}

pub(crate) fn verify(opts: &Options, grid_text: &str, max_m: u32, fault: Option<Fault>) -> CmdResult {
    let grid = Grid::parse(grid_text).map_err(|e| InputError(format!("--grid `{grid_text}`: {e}")))?;
    if !opts.no_limits {
        if !grid.within(&Grid::default()) {
            return Err(InputError(format!(
                "--grid `{grid_text}` extends past n=2..5,e=2..5,k=0..3; pass --no-limits to proceed"
            )));
        }
        if max_m > 8 {
            return Err(InputError(format!(
                "--max-m {max_m} exceeds the default cap of 8; pass --no-limits to proceed"
            )));
        }
    }
    if *grid.e.start() < 2 {
        return Err(InputError(format!("--grid `{grid_text}`: covers need e >= 2")));
    }
    let forms = closed_forms(fault);

    let mut points: Vec<PointResult> = grid
        .points()
        .into_par_iter()
        .map(|(n, e, k)| verify_point(n, e, k, max_m, &forms))
        .collect::<Result<_, _>>()?;
    points.sort_by_key(|p| (p.n, p.e, p.k));

    let mut bases: Vec<(usize, i64)> = grid.points().iter().map(|&(n, e, _)| (n, e)).collect();
    bases.dedup();
    let mut base_results: Vec<((usize, i64), Vec<IdentityCheck>)> = bases
        .into_par_iter()
        .map(|(n, e)| base_checks(n, e).map(|c| ((n, e), c)))
        .collect::<Result<_, _>>()?;
    base_results.sort_by_key(|(key, _)| *key);

    let mut covers = Table::new(["n", "e", "k", "dim", "p_g", "Vol", "a", "b", "checks", "status"]).titled("Covers");
    let mut diagnostics = Vec::new();
    let mut total = 0;
    for p in &points {
        let failed = p.checks.iter().filter(|c| !c.passed).count();
        total += p.checks.len();
        covers.push([
            p.n.to_string(),
            p.e.to_string(),
            p.k.to_string(),
            p.dim.to_string(),
            p.p_g.to_string(),
            p.volume.to_string(),
            p.slope.0.to_string(),
            p.slope.1.to_string(),
            format!("{}/{}", p.checks.len() - failed, p.checks.len()),
            status(failed == 0).to_string(),
        ]);
        diagnostics.extend(diagnostics_of(&format!("(n={}, e={}, k={}) ", p.n, p.e, p.k), &p.checks));
    }

    let mut base = Table::new(["n", "e", "checks", "status"]).titled("Base towers");
    for ((n, e), checks) in &base_results {
        let failed = checks.iter().filter(|c| !c.passed).count();
        total += checks.len();
        base.push([
            n.to_string(),
            e.to_string(),
            format!("{}/{}", checks.len() - failed, checks.len()),
            status(failed == 0).to_string(),
        ]);
        diagnostics.extend(diagnostics_of(&format!("(Y_n n={n}, e={e}) "), checks));
    }

    let mut tables = vec![covers, base];
    if !diagnostics.is_empty() {
        let mut failures = Table::new(["check", "expected", "actual"]).titled("Failures");
        for d in &diagnostics {
            failures.push([d.name.clone(), d.expected.clone(), d.actual.clone()]);
        }
        tables.push(failures);
    }
    let mut text = render_all(&tables, opts.format);
    let summary = format!("{} checks, {} failed", total, diagnostics.len());
    match opts.format {
        crate::Format::Markdown => text.push_str(&format!("\n{summary}\n")),
        crate::Format::Tsv => text.push_str(&format!("# {summary}\n")),
    }
    Ok(Output { text, diagnostics })
}

pub(crate) fn slope_table(opts: &Options, n: usize, kmax: usize) -> CmdResult {
    if n < 2 {
        return Err(InputError(format!("--n must be at least 2, got {n}")));
    }
    if kmax > 64 && !opts.no_limits {
        return Err(InputError(format!(
            "--kmax {kmax} exceeds the default cap of 64; pass --no-limits to proceed"
        )));
    }
    let mut t = Table::new(["k", "a", "b"]).titled(format!("Slope coefficients, n = {n}"));
    for (k, a) in slope_limit_table(n, kmax) {
        let (_, b) = slope_coefficients(n, k);
        t.push([k.to_string(), a.to_string(), b.to_string()]);
    }
    ok(render_all(&[t], opts.format))
}

pub(crate) fn wps(opts: &Options, weights: Vec<u64>, degree: u64, times_curve: Option<u64>) -> CmdResult {
    let x = WeightedHypersurface::new(weights, degree).map_err(|e| InputError(format!("--weights/--degree: {e}")))?;
    let inv = wh_invariants(&x);
    let weights: Vec<String> = x.weights().iter().map(u64::to_string).collect();
    let mut t = Table::new(["quantity", "value"]).titled(format!("X_{degree} in P({})", weights.join(",")));
    t.push(["dim".to_string(), inv.dim.to_string()]);
    t.push(["alpha".to_string(), inv.alpha.to_string()]);
    t.push(["p_g".to_string(), inv.p_g.to_string()]);
    t.push(["Vol".to_string(), inv.volume.to_string()]);
    t.push(["general type".to_string(), inv.general_type.to_string()]);
    t.push([
        "assumption".to_string(),
        "general quasi-smooth member with K = O(alpha); not checked".to_string(),
    ]);
    if let Some(g) = times_curve {
        let (pg_z, vol_z) =
            product_with_curve(inv.p_g, &inv.volume, inv.dim, g).map_err(|e| InputError(format!("--times-curve: {e}")))?;
        t.push(["g(C)".to_string(), g.to_string()]);
        t.push(["dim Z".to_string(), (inv.dim + 1).to_string()]);
        t.push(["p_g(Z)".to_string(), pg_z.to_string()]);
        t.push(["Vol(Z)".to_string(), vol_z.to_string()]);
    }
    ok(render_all(&[t], opts.format))
}
