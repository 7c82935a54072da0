use std::fmt::Write as _;
use std::path::Path;

use anyhow::{bail, Context, Result};
use serde::Serialize;

use semiband::constructions::{
    build_a, build_f, build_l, build_phi, build_r, build_star, build_t, AVariant, ConstructionBundle, Side, StarKind,
};
use semiband::depth::{depth_analysis, DepthKind};
use semiband::enumeration::{corpus_up_to, enumerate_semigroups, export_corpus, load_directory, order_cap, Modulo};
use semiband::green::{egg_box_dot, natural_order, GreenRelation};
use semiband::iso::find_isomorphism;
use semiband::properties::{check_property, non_regular_element, PropertyName};
use semiband::sgp::to_sgp_string;
use semiband::transformations::higgins_t;
use semiband::verification::{
    bound_report, verify_claims, BoundReport, ClaimId, ClaimVerdict, Target, VerificationReport, VerifyOptions,
};
use semiband::{FiniteSemigroup, GreensStructure, SemigroupError};

use crate::input::{load, write};
use crate::{Command, ConstructionKind, Format, ModuloArg, Status};

pub fn run(command: Command) -> Result<Status> {
    match command {
        Command::Analyze { file } => analyze(&file),
        Command::Construct {
            kind,
            file,
            degree,
            output,
        } => construct(kind, file.as_deref(), degree, &output),
        Command::Green { file, dot } => green(&file, dot.as_deref()),
        Command::Iso { a, b } => iso(&a, &b),
        Command::Enumerate { n, output, modulo } => enumerate(n, &output, modulo),
        Command::Verify {
            max_order,
            input,
            regular_only,
            seed,
            jobs,
            claims,
            timing,
            format,
        } => {
            let claims = if claims.is_empty() {
                ClaimId::ALL.to_vec()
            } else {
                claims.iter().map(|c| c.parse()).collect::<Result<Vec<ClaimId>, _>>()?
            };
            let targets = verify_targets(max_order, input.as_deref(), regular_only)?;
            let opts = VerifyOptions {
                seed,
                record_timing: timing,
            };
            verify(&targets, &claims, &opts, jobs, format)
        }
        Command::Bounds { dir, format } => bounds(&dir, format),
    }
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn join(items: impl IntoIterator<Item = usize>) -> String {
    items.into_iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ")
}

fn dossier(s: &FiniteSemigroup) -> Result<String> {
    let mut out = String::new();
    let g = GreensStructure::compute(s);
    writeln!(out, "order: {}", s.order())?;
    let show = |x: Option<usize>| x.map_or("none".to_string(), |x| s.label(x));
    writeln!(out, "identity: {}", show(s.identity()))?;
    writeln!(out, "zero: {}", show(s.zero()))?;
    writeln!(
        out,
        "idempotents: {}",
        s.idempotents().iter().map(|e| s.label(e)).collect::<Vec<_>>().join(" ")
    )?;
    let d = depth_analysis(s);
    match d.kind {
        DepthKind::Semiband { depth } => writeln!(out, "depth: semiband of depth {depth}")?,
        DepthKind::NotSemiband => writeln!(out, "depth: not a semiband (<E> has {} elements)", d.generated().len())?,
    }
    writeln!(out, "depth chain: {}", join(d.chain.iter().map(|c| c.len())))?;
    let counts: Vec<String> = GreenRelation::ALL
        .iter()
        .map(|&k| format!("{k:?} {}", g.class_count(k)))
        .collect();
    writeln!(out, "green classes: {}", counts.join(", "))?;
    writeln!(out, "properties:")?;
    for p in PropertyName::ALL {
        let value = match check_property(s, p) {
            Ok(v) => yes_no(v.holds()).to_string(),
            Err(SemigroupError::NoZeroElement) => "n/a (no zero)".to_string(),
            Err(e) => return Err(e.into()),
        };
        writeln!(out, "  {:<24}{value}", p.to_string())?;
    }
    writeln!(out, "natural order pairs: {}", natural_order(s).pair_count())?;
    Ok(out)
}

fn analyze(file: &Path) -> Result<Status> {
    print!("{}", dossier(&load(file)?)?);
    Ok(Status::Ok)
}

fn build(kind: ConstructionKind, s: &FiniteSemigroup) -> Result<ConstructionBundle> {
    Ok(match kind {
        ConstructionKind::T => build_t(s)?,
        ConstructionKind::R => build_r(s, Side::Right)?,
        ConstructionKind::L => build_l(s)?,
        ConstructionKind::Tstar => build_star(s, StarKind::Tstar)?,
        ConstructionKind::Rstar => build_star(s, StarKind::Rstar)?,
        ConstructionKind::F => build_f(s)?,
        ConstructionKind::A => build_a(s, AVariant::Full)?.a,
        ConstructionKind::Phi => build_phi(s)?.phi,
        ConstructionKind::Higgins => unreachable!("built from a degree"),
    })
}

fn construct(kind: ConstructionKind, file: Option<&Path>, degree: Option<usize>, output: &Path) -> Result<Status> {
    let name = format!("{kind:?}").to_lowercase();
    let bundle = match (kind, file, degree) {
        (ConstructionKind::Higgins, None, Some(k)) => higgins_t(k)?,
        (ConstructionKind::Higgins, _, _) => bail!("higgins takes --degree K and no input file"),
        (_, Some(file), None) => build(kind, &load(file)?)?,
        (_, _, _) => bail!("{name} takes one input file and no --degree"),
    };
    write(output, &to_sgp_string(&bundle.result))?;
    let sidecar = output.with_extension("json");
    write(
        &sidecar,
        &(serde_json::to_string_pretty(&bundle.sidecar(&name))? + "\n"),
    )?;
    println!(
        "{name}: order {} -> {} (+ {})",
        bundle.result.order(),
        output.display(),
        sidecar.display()
    );
    Ok(Status::Ok)
}

fn green(file: &Path, dot: Option<&Path>) -> Result<Status> {
    let s = load(file)?;
    let g = GreensStructure::compute(&s);
    for k in GreenRelation::ALL {
        let classes: Vec<String> = g
            .classes(k)
            .iter()
            .map(|c| format!("{{{}}}", c.iter().map(|&x| s.label(x)).collect::<Vec<_>>().join(" ")))
            .collect();
        println!("{k:?} ({}): {}", classes.len(), classes.join(" "));
    }
    if let Some(path) = dot {
        write(path, &egg_box_dot(&s, &g))?;
    }
    Ok(Status::Ok)
}

fn iso(a: &Path, b: &Path) -> Result<Status> {
    let (s, t) = (load(a)?, load(b)?);
    match find_isomorphism(&s, &t)? {
        Some(h) => {
            println!("isomorphic: {}", join(h.map().iter().copied()));
            Ok(Status::Ok)
        }
        None => {
            println!("not isomorphic");
            Ok(Status::Failed)
        }
    }
}

fn modulo(m: ModuloArg) -> Modulo {
    match m {
        ModuloArg::None => Modulo::None,
        ModuloArg::Iso => Modulo::Isomorphism,
        ModuloArg::Anti => Modulo::IsomorphismAndAnti,
    }
}

fn enumerate(n: usize, output: &Path, m: ModuloArg) -> Result<Status> {
    let corpus = enumerate_semigroups(n, modulo(m))?;
    let manifest = export_corpus(&corpus, output).with_context(|| format!("exporting to {}", output.display()))?;
    println!("order {n}: {} semigroups -> {}", manifest.count, output.display());
    Ok(Status::Ok)
}

fn verify_targets(max_order: Option<usize>, input: Option<&Path>, regular_only: bool) -> Result<Vec<Target>> {
    let members: Vec<(String, FiniteSemigroup)> = match input {
        Some(dir) => load_directory(dir)?
            .into_iter()
            .map(|(p, s)| (p.file_name().unwrap_or_default().to_string_lossy().into_owned(), s))
            .collect(),
        None => {
            let cap = order_cap();
            let n = max_order.unwrap_or(cap);
            if n > cap {
                return Err(SemigroupError::OrderTooLarge { order: n, cap }.into());
            }
            corpus_up_to(n, Modulo::Isomorphism)?
                .into_iter()
                .map(|s| (semiband::verification::table_name(&s), s))
                .collect()
        }
    };
    Ok(members
        .into_iter()
        .filter(|(_, s)| !regular_only || non_regular_element(s).is_none())
        .map(|(name, s)| Target::new(name, s))
        .collect())
}

fn verify(
    targets: &[Target],
    claims: &[ClaimId],
    opts: &VerifyOptions,
    jobs: Option<usize>,
    format: Format,
) -> Result<Status> {
    let mut pool = rayon::ThreadPoolBuilder::new();
    if let Some(j) = jobs {
        pool = pool.num_threads(j.max(1));
    }
    let report = pool.build()?.install(|| verify_claims(targets, claims, opts))?;
    match format {
        Format::Json => println!("{}", report.to_json()),
        Format::Text => print!("{}", report_text(&report, opts.record_timing)),
    }
    Ok(if report.all_passed() {
        Status::Ok
    } else {
        Status::Failed
    })
}

fn report_text(report: &VerificationReport, timing: bool) -> String {
    let mut out = String::new();
    for e in &report.entries {
        let _ = write!(out, "{}  {}  {}", e.member, e.claim, e.verdict);
        if let Some(w) = &e.witness {
            let _ = write!(out, "  witness {w}");
        }
        if let Some(r) = &e.reason {
            let _ = write!(out, "  ({r})");
        }
        if timing {
            let _ = write!(out, "  {} ms", e.millis);
        }
        out.push('\n');
    }
    out.push_str("\nclaim  pass  fail  skipped\n");
    for (claim, pass, fail, skip) in report.summary() {
        let _ = writeln!(out, "{claim}  {pass}  {fail}  {skip}");
    }
    let _ = writeln!(
        out,
        "\n{} entries, {} failed",
        report.entries.len(),
        report.count(ClaimVerdict::Fail)
    );
    out
}

#[derive(Serialize)]
struct BoundRow {
    file: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    report: Option<BoundReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    skipped: Option<String>,
}

fn within_claims(b: &BoundReport) -> bool {
    b.reg_ok() && b.l_order <= b.two_n_r && b.nm_ok
}

fn bounds(dir: &Path, format: Format) -> Result<Status> {
    let mut rows = Vec::new();
    for (path, s) in load_directory(dir)? {
        let file = path.file_name().unwrap_or_default().to_string_lossy().into_owned();
        let row = match bound_report(&s) {
            Ok(b) => BoundRow {
                file,
                report: Some(b),
                skipped: None,
            },
            Err(SemigroupError::NotRegular(_)) => BoundRow {
                file,
                report: None,
                skipped: Some("not regular".into()),
            },
            Err(e) => return Err(e.into()),
        };
        rows.push(row);
    }
    let ok = rows.iter().filter_map(|r| r.report.as_ref()).all(within_claims);
    match format {
        Format::Json => println!("{}", serde_json::to_string_pretty(&rows)?),
        Format::Text => {
            println!("file  n  m  l  r  |R|  2nl  |L|  2nr  min²  4n³m  tight  ok");
            for row in &rows {
                match &row.report {
                    Some(b) => println!(
                        "{}  {}  {}  {}  {}  {}  {}  {}  {}  {}  {}  {}  {}",
                        row.file,
                        b.n,
                        b.m,
                        b.l,
                        b.r,
                        b.r_order,
                        b.two_n_l,
                        b.l_order,
                        b.two_n_r,
                        b.min_squared,
                        b.four_n_cubed_m,
                        yes_no(b.tight),
                        yes_no(within_claims(b))
                    ),
                    None => println!("{}  skipped ({})", row.file, row.skipped.as_deref().unwrap_or_default()),
                }
            }
        }
    }
    Ok(if ok { Status::Ok } else { Status::Failed })
}

#[cfg(test)]
mod tests {
    use super::*;
    use semiband::catalog;

    #[test]
    fn dossier_lists_everything() {
        let d = dossier(&catalog::semilattice01()).unwrap();
        assert!(d.starts_with("order: 2\n"));
        assert!(d.contains("depth: semiband of depth 1"));
        assert!(d.contains("green classes: R 2, L 2, H 2, D 2, J 2"));
        assert!(d.contains("natural order pairs: 3"));
        assert_eq!(
            d.lines().filter(|l| l.starts_with("  ")).count(),
            PropertyName::ALL.len()
        );
    }

    #[test]
    fn zero_properties_without_zero() {
        let d = dossier(&catalog::cyclic_group(2)).unwrap();
        assert!(d.contains("n/a (no zero)"));
    }
}
