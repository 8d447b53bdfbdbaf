use std::collections::BTreeSet;

use num_bigint::{BigInt, BigUint};
use serde_json::json;
use thiserror::Error;

use tanglekit::asymptotics::{expand, fit_k, sci4, subexp_table_by_term, AsymptoticExpansion};
use tanglekit::counting::{
    constrained_walks, count_vacillating, d_count, enumerate_vacillating, f_k, p32_closed, p32_via_braids,
    reflection_count, StepPairSet,
};
use tanglekit::oracle::{
    crossing_number, enum_partitions, enum_perfect_matchings, for_each_tangled, oracle_count, ClassSpec,
};
use tanglekit::recurrence::{p32_recurrence, PolyRecurrence};
use tanglekit::{diagram_to_tableau, tableau_to_diagram, theta, theta_inv, DiagramClass, TangledDiagram};

use crate::args::{CountTarget, Format, Method, Opts, TableKind};
use crate::output::{pretty, Cell, Table};
use crate::svg;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Domain(String),
    /// Checks ran and at least one printed FAIL.
    #[error("{0} check(s) failed")]
    Failed(usize),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Domain(_) | CliError::Failed(_) => 1,
        }
    }
}

fn domain(e: impl std::fmt::Display) -> CliError {
    CliError::Domain(e.to_string())
}

/// Output of one invocation: the text to emit and, for checks, how many
/// failed.
pub struct Report {
    pub text: String,
    pub failures: usize,
}

impl Report {
    fn ok(text: String) -> Self {
        Report { text, failures: 0 }
    }
}

fn emit(table: &Table, format: Format) -> String {
    match format {
        Format::Text => table.to_text(),
        Format::Csv => table.to_csv(),
        Format::Json => table.to_json(),
    }
}

fn k_or(opts: &Opts, default: usize) -> Result<usize, CliError> {
    match opts.k.unwrap_or(default) {
        k if k >= 2 => Ok(k),
        k => Err(CliError::Usage(format!("--k {k}: k must be at least 2"))),
    }
}

fn methods(opts: &Opts, default: &[Method], allowed: &[Method], what: &str) -> Result<Vec<Method>, CliError> {
    let chosen = if opts.method.is_empty() { default.to_vec() } else { opts.method.clone() };
    if let Some(bad) = chosen.iter().find(|m| !allowed.contains(m)) {
        let names: Vec<&str> = allowed.iter().map(|m| m.name()).collect();
        return Err(CliError::Usage(format!(
            "method `{}` does not apply to {what}; choose from {}",
            bad.name(),
            names.join(",")
        )));
    }
    Ok(chosen)
}

fn to_vertex(n: usize) -> Result<u32, CliError> {
    u32::try_from(n).map_err(|_| CliError::Usage(format!("n = {n} is too large")))
}

/// Appends one row per `n` and fails if the method columns disagree.
fn method_table(
    label: &str,
    ns: impl IntoIterator<Item = usize>,
    chosen: &[Method],
    mut value: impl FnMut(Method, usize) -> Result<BigUint, CliError>,
) -> Result<Table, CliError> {
    let mut table = Table::new([label.to_string()].into_iter().chain(chosen.iter().map(|m| m.name().to_string())));
    for n in ns {
        let values = chosen.iter().map(|&m| value(m, n)).collect::<Result<Vec<_>, _>>()?;
        if values.windows(2).any(|w| w[0] != w[1]) {
            return Err(CliError::Domain(format!("methods disagree at {label} = {n}: {values:?}")));
        }
        table.push([Cell::int(n)].into_iter().chain(values.into_iter().map(Cell::int)).collect());
    }
    Ok(table)
}

pub fn count(what: CountTarget, opts: &Opts) -> Result<Report, CliError> {
    use Method::*;
    let table = match what {
        CountTarget::P32 => {
            if opts.k.is_some_and(|k| k != 3) {
                return Err(CliError::Usage("p32 counts are 3-noncrossing; drop --k".into()));
            }
            let top = opts.upper(12);
            let chosen = methods(opts, &[Sum, Rec, Dp], &[Sum, Rec, Dp, Oracle], "p32")?;
            let rec = if chosen.contains(&Rec) {
                p32_recurrence().evaluate(top).map_err(domain)?
            } else {
                Vec::new()
            };
            method_table("n", 1..=top, &chosen, |m, n| match m {
                Sum => p32_closed(n as u64 - 1).map_err(domain),
                Rec => Ok(rec[n - 1].to_biguint().expect("counts are nonnegative")),
                Dp => Ok(p32_via_braids(n)),
                Oracle => oracle_count(ClassSpec::new(DiagramClass::TwoRegularPartition, to_vertex(n)?).k(3))
                    .map_err(domain),
            })?
        }
        CountTarget::D => {
            let k = k_or(opts, 3)?;
            let ells = if opts.ell.is_empty() { vec![1, 2, 3] } else { opts.ell.clone() };
            let top = opts.upper(10);
            let chosen = methods(opts, &[Sum], &[Sum, Oracle], "d")?;
            let mut table =
                Table::new(["ell", "n"].into_iter().map(String::from).chain(chosen.iter().map(|m| m.name().into())));
            for &ell in &ells {
                let sub = method_table("n", 1..=top, &chosen, |m, n| match m {
                    Sum => d_count(n, ell, k).map_err(domain),
                    _ => oracle_count(ClassSpec::new(DiagramClass::General, to_vertex(n)?).ell(ell).k(k)).map_err(domain),
                })?;
                for row in sub.rows {
                    table.push([Cell::int(ell)].into_iter().chain(row).collect());
                }
            }
            table
        }
        CountTarget::Matchings => {
            let k = k_or(opts, 3)?;
            let default: &[Method] = if k <= 3 { &[Sum, Dp] } else { &[Dp] };
            let allowed: &[Method] = if k <= 3 { &[Sum, Dp, Oracle] } else { &[Dp, Oracle] };
            let chosen = methods(opts, default, allowed, "matchings")?;
            let top = opts.upper(20);
            method_table("points", (2..=top).step_by(2), &chosen, |m, points| match m {
                Sum => f_k(k, points).map_err(domain),
                Dp => Ok(count_vacillating(&StepPairSet::matchings(k), points)),
                _ => {
                    let mut c = 0u64;
                    for m in enum_perfect_matchings(to_vertex(points)?).map_err(domain)? {
                        if crossing_number(&m).map_err(domain)? < k {
                            c += 1;
                        }
                    }
                    Ok(BigUint::from(c))
                }
            })?
        }
        CountTarget::Partitions => {
            let k = k_or(opts, 3)?;
            let chosen = methods(opts, &[Dp], &[Dp, Oracle], "partitions")?;
            method_table("n", 1..=opts.upper(8), &chosen, |m, n| match m {
                Dp => Ok(count_vacillating(&StepPairSet::partitions(k), n)),
                _ => oracle_count(ClassSpec::new(DiagramClass::Partition, to_vertex(n)?).k(k)).map_err(domain),
            })?
        }
        CountTarget::Braids => {
            let k = k_or(opts, 3)?;
            let allowed: &[Method] = if k == 3 { &[Sum, Dp, Oracle] } else { &[Dp, Oracle] };
            let chosen = methods(opts, &[Dp], allowed, "braids")?;
            method_table("n", 1..=opts.upper(8), &chosen, |m, n| match m {
                Sum => reflection_count(2 * n).map_err(domain),
                Dp => Ok(count_vacillating(&StepPairSet::braids(k), n)),
                _ => oracle_count(ClassSpec::new(DiagramClass::BraidNoIsolated, to_vertex(n)?).k(k)).map_err(domain),
            })?
        }
        CountTarget::Tangled => {
            let k = k_or(opts, 3)?;
            let chosen = methods(opts, &[Sum, Dp], &[Sum, Dp, Oracle], "tangled")?;
            method_table("n", 1..=opts.upper(6), &chosen, |m, n| match m {
                Sum => (0..=n).map(|ell| d_count(n, ell, k).map_err(domain)).sum(),
                Dp => Ok(count_vacillating(&StepPairSet::tangled(k), n)),
                _ => oracle_count(ClassSpec::new(DiagramClass::General, to_vertex(n)?).k(k)).map_err(domain),
            })?
        }
    };
    Ok(Report::ok(emit(&table, opts.format)))
}

pub fn oracle(class: &str, opts: &Opts) -> Result<Report, CliError> {
    let class: DiagramClass = class.parse().map_err(|e| CliError::Usage(format!("{e}")))?;
    let ells: Vec<Option<usize>> = if opts.ell.is_empty() { vec![None] } else { opts.ell.iter().map(|&e| Some(e)).collect() };
    let mut table = Table::new(["class", "n", "ell", "k", "count"]);
    for ell in ells {
        for n in 1..=opts.upper(6) {
            let mut spec = ClassSpec::new(class, to_vertex(n)?);
            spec.ell = ell;
            spec.k = opts.k;
            let count = oracle_count(spec).map_err(domain)?;
            let opt = |x: Option<usize>| Cell::Text(x.map_or_else(|| "any".to_string(), |v| v.to_string()));
            table.push(vec![Cell::Text(class.name().into()), Cell::int(n), opt(ell), opt(opts.k), Cell::int(count)]);
        }
    }
    Ok(Report::ok(emit(&table, opts.format)))
}

/// PASS/FAIL lines for a list of named checks.
fn check_lines(checks: Vec<(String, Result<String, String>)>) -> Report {
    let mut text = String::new();
    let mut failures = 0;
    for (name, result) in checks {
        match result {
            Ok(detail) => text.push_str(&format!("PASS {name}: {detail}\n")),
            Err(detail) => {
                failures += 1;
                text.push_str(&format!("FAIL {name}: {detail}\n"));
            }
        }
    }
    Report { text, failures }
}

fn first_failure<T>(items: impl IntoIterator<Item = T>, check: impl Fn(&T) -> Option<String>) -> Result<usize, String> {
    let mut seen = 0;
    for item in items {
        seen += 1;
        if let Some(why) = check(&item) {
            return Err(why);
        }
    }
    Ok(seen)
}

pub fn bijection_check(opts: &Opts) -> Result<Report, CliError> {
    let top = to_vertex(opts.upper(5))?;
    let mut tangled = Vec::new();
    for n in 1..=top {
        for_each_tangled(n, None, |d| tangled.push(d)).map_err(domain)?;
    }
    let mut checks = Vec::new();

    let round = first_failure(&tangled, |d| {
        let back = tableau_to_diagram(&diagram_to_tableau(d));
        (back.as_ref() != Ok(*d)).then(|| format!("{d} came back as {back:?}"))
    });
    checks.push(("diagram round trip".into(), round.map(|c| format!("{c} diagrams, n <= {top}"))));

    let rows = first_failure(&tangled, |d| {
        let rows = diagram_to_tableau(d).max_rows();
        let cr = crossing_number(&d.inflate()).ok()?;
        (rows != cr).then(|| format!("{d}: {rows} rows, crossing number {cr}"))
    });
    checks.push(("rows = crossing number".into(), rows.map(|c| format!("{c} diagrams"))));

    let wide = top as usize + 1;
    let (partitions, braids, matchings) =
        (StepPairSet::partitions(wide), StepPairSet::braids(wide), StepPairSet::matchings(wide));
    let steps = first_failure(&tangled, |d| {
        let perfect = d.is_matching() && (1..=d.n()).all(|v| d.degree(v) == 1);
        let pairs = diagram_to_tableau(d).step_pairs();
        [
            (d.is_partition(), &partitions),
            (d.is_braid_without_isolated(), &braids),
            (perfect, &matchings),
        ]
        .into_iter()
        .filter(|(applies, _)| *applies)
        .find_map(|(_, set)| pairs.iter().find(|p| !set.contains(**p)))
        .map(|p| format!("{d}: step pair {p:?} outside its class alphabet"))
    });
    checks.push(("class step alphabets".into(), steps.map(|c| format!("{c} diagrams"))));

    let set = StepPairSet::tangled(3);
    let tableaux: Vec<_> = (1..=top as usize).flat_map(|n| enumerate_vacillating(&set, n)).collect();
    let back = first_failure(&tableaux, |vt| match tableau_to_diagram(vt) {
        Ok(d) => (diagram_to_tableau(&d) != **vt).then(|| format!("tableau for {d} does not round trip")),
        Err(e) => Some(e.to_string()),
    });
    checks.push(("tableau round trip".into(), back.map(|c| format!("{c} tableaux with < 3 rows"))));

    let mut theta_result = Ok(0usize);
    'outer: for n in 2..=(top + 1).min(10) {
        let mut image = BTreeSet::new();
        for p in enum_partitions(n).map_err(domain)? {
            if !p.is_two_regular_partition() {
                continue;
            }
            let fail = |why: String| Err(format!("{p}: {why}"));
            let b = match theta(&p) {
                Ok(b) => b,
                Err(e) => {
                    theta_result = fail(e.to_string());
                    break 'outer;
                }
            };
            let shifted = p.arcs().iter().all(|&(i, j)| b.arcs().contains(&(i, j - 1)));
            if theta_inv(&b).as_ref() != Ok(&p) || !shifted {
                theta_result = fail(format!("theta gives {b}"));
                break 'outer;
            }
            if crossing_number(&p.inflate()).is_ok_and(|c| c < 3) {
                image.insert(b);
            }
            theta_result = theta_result.map(|c| c + 1);
        }
        let braids = oracle_count(ClassSpec::new(DiagramClass::BraidNoIsolated, n - 1).k(3)).map_err(domain)?;
        if BigUint::from(image.len()) != braids {
            theta_result = Err(format!("n = {n}: image {} vs {braids} braids", image.len()));
            break;
        }
    }
    checks.push((
        "partition/braid map".into(),
        theta_result.map(|c| format!("{c} 2-regular partitions, n <= {}", (top + 1).min(10))),
    ));

    Ok(check_lines(checks))
}

pub fn reflect_check(opts: &Opts) -> Result<Report, CliError> {
    let braids = StepPairSet::braids(3);
    let mut checks = Vec::new();
    for n in 0..=opts.upper(12) {
        let diff = reflection_count(2 * n).map_err(domain)?;
        let direct = constrained_walks(2 * n).map_err(domain)?;
        let shapes = count_vacillating(&braids, n);
        let detail = format!("difference {diff}, constrained {direct}, shapes {shapes}");
        let result = if diff == direct && direct == shapes { Ok(detail) } else { Err(detail) };
        checks.push((format!("2n = {}", 2 * n), result));
    }
    Ok(check_lines(checks))
}

/// `p32`, or `rec "c0, c1, ..." seeds s1,s2,... [shift S]`. The shift
/// defaults to 1: `c0` multiplies `y(n+1)` and `n` starts at 0.
pub fn parse_recurrence(spec: &[String]) -> Result<PolyRecurrence, CliError> {
    let usage = |why: &str| CliError::Usage(format!("{why}; expected `p32` or `rec \"c0, c1, ...\" seeds s1,s2,... [shift S]`"));
    match spec {
        [] => Ok(p32_recurrence()),
        [one] if one == "p32" => Ok(p32_recurrence()),
        _ => {
            let mut words = spec.iter().map(String::as_str);
            if words.next() != Some("rec") {
                return Err(usage("unknown recurrence"));
            }
            let coeffs = words.next().ok_or_else(|| usage("missing coefficients"))?;
            if words.next() != Some("seeds") {
                return Err(usage("missing `seeds`"));
            }
            let seeds = words
                .next()
                .ok_or_else(|| usage("missing seed values"))?
                .split(',')
                .map(|s| s.trim().parse::<BigInt>())
                .collect::<Result<Vec<_>, _>>()
                .map_err(|_| usage("seeds must be integers"))?;
            let shift = match (words.next(), words.next()) {
                (None, _) => 1,
                (Some("shift"), Some(s)) => s.parse().map_err(|_| usage("shift must be an integer"))?,
                _ => return Err(usage("trailing input")),
            };
            if words.next().is_some() {
                return Err(usage("trailing input"));
            }
            PolyRecurrence::parse(coeffs, seeds, shift).map_err(domain)
        }
    }
}

pub fn recurrence(spec: &[String], opts: &Opts) -> Result<Report, CliError> {
    let rec = parse_recurrence(spec)?;
    let terms = rec.evaluate(opts.upper(12)).map_err(domain)?;
    let mut table = Table::new(["n", "term"]);
    for (i, t) in terms.iter().enumerate() {
        table.push(vec![Cell::int(i + 1), Cell::int(t)]);
    }
    Ok(Report::ok(emit(&table, opts.format)))
}

/// Term indices of the reproduced sub-exponential table.
const SUBEXP_TERMS: [usize; 12] = [21, 31, 41, 51, 61, 71, 81, 91, 101, 501, 1001, 10001];

fn subexp_terms(opts: &Opts) -> Vec<usize> {
    let cap = opts.n_max.unwrap_or(usize::MAX);
    SUBEXP_TERMS.iter().copied().filter(|&t| t <= cap).collect()
}

struct Fitted {
    exp: AsymptoticExpansion,
    table: Table,
}

fn fitted(rec: &PolyRecurrence, opts: &Opts) -> Result<Fitted, CliError> {
    let exp = expand(rec, opts.corrections).map_err(domain)?;
    let terms = subexp_terms(opts);
    let needed = terms
        .iter()
        .copied()
        .chain([(opts.fit_n as i64 + exp.shift).max(1) as usize])
        .max()
        .unwrap_or(1);
    let seq = rec.evaluate(needed).map_err(domain)?;
    let k = fit_k(&seq, &exp, opts.fit_n).map_err(domain)?;
    let exp = exp.with_k(k);
    let mut table = Table::new(["n", "exact_ratio", "g", "consistent"]);
    for (term, row) in subexp_table_by_term(&seq, &exp, &terms).map_err(domain)? {
        table.push(vec![
            Cell::int(term),
            Cell::Float(row.exact_ratio),
            Cell::Float(row.g),
            Cell::Bool(row.relative_gap() < 0.02),
        ]);
    }
    Ok(Fitted { exp, table })
}

pub fn asym(spec: &[String], opts: &Opts) -> Result<Report, CliError> {
    let rec = parse_recurrence(spec)?;
    let Fitted { exp, table } = fitted(&rec, opts)?;
    let k = exp.k.expect("fitted");
    let text = match opts.format {
        Format::Json => pretty(&json!({
            "lambda": exp.lambda.to_string(),
            "theta": exp.theta.to_string(),
            "corrections": exp.corrections.iter().map(|c| c.to_string()).collect::<Vec<_>>(),
            "K": k,
            "table": table.to_json_value(),
        })),
        Format::Csv => {
            let mut t = Table::new(["quantity", "value"]);
            t.push(vec![Cell::Text("lambda".into()), Cell::Text(exp.lambda.to_string())]);
            t.push(vec![Cell::Text("theta".into()), Cell::Text(exp.theta.to_string())]);
            for (j, c) in exp.corrections.iter().enumerate() {
                t.push(vec![Cell::Text(format!("c{}", j + 1)), Cell::Text(c.to_string())]);
            }
            t.push(vec![Cell::Text("K".into()), Cell::Text(format!("{k:.6}"))]);
            t.to_csv()
        }
        Format::Text => {
            let mut s = format!("lambda = {}\ntheta = {}\n", exp.lambda, exp.theta);
            for (j, c) in exp.corrections.iter().enumerate() {
                s.push_str(&format!("c{} = {c} ({})\n", j + 1, sci4(tanglekit::asymptotics::approx(c))));
            }
            s.push_str(&format!("K = {k:.6} (fitted at n = {})\n\n", opts.fit_n));
            s.push_str(&table.to_text());
            s
        }
    };
    Ok(Report::ok(text))
}

pub fn table(which: TableKind, opts: &Opts) -> Result<Report, CliError> {
    let table = match which {
        TableKind::D => {
            let k = k_or(opts, 3)?;
            let ells = if opts.ell.is_empty() { vec![1, 2, 3] } else { opts.ell.clone() };
            let top = opts.upper(10);
            let mut t = Table::new(["ell".to_string()].into_iter().chain((1..=top).map(|n| n.to_string())));
            for ell in ells {
                let mut row = vec![Cell::int(ell)];
                for n in 1..=top {
                    row.push(Cell::int(d_count(n, ell, k).map_err(domain)?));
                }
                t.push(row);
            }
            t
        }
        TableKind::P32 => {
            let terms = p32_recurrence().evaluate(opts.upper(12)).map_err(domain)?;
            let mut t = Table::new(["n", "p"]);
            for (i, p) in terms.iter().enumerate() {
                t.push(vec![Cell::int(i + 1), Cell::int(p)]);
            }
            t
        }
        TableKind::Subexp => fitted(&p32_recurrence(), opts)?.table,
    };
    Ok(Report::ok(emit(&table, opts.format)))
}

pub fn render(words: &[String]) -> Result<Report, CliError> {
    if words.is_empty() {
        return Err(CliError::Usage("render needs a diagram literal such as `n=4; arcs=(1,3)(2,4)`".into()));
    }
    let d: TangledDiagram = words.join(" ").parse().map_err(domain)?;
    Ok(Report::ok(svg::render(&d)))
}
