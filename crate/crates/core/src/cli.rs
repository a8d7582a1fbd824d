//! `wfano` command line: every subcommand delegates to a library module and
//! prints JSON (default) or markdown. All randomness comes from `--seed`.
//!
//! Exit status: 0 on success, 1 on a domain error (a JSON object
//! `{"error": kind, "message": ...}` on stderr), 2 on a usage error.

use std::collections::BTreeSet;
use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;

use crate::catalog::{self, FamilyRecord, SearchBounds};
use crate::error::{Error, Result};
use crate::irrational::{self, IrrationalityVerdict};
use crate::membership::membership_report;
use crate::singular::{reid_tai_terminal, singular_points_general};
use crate::symalg::{golden_table, normalized_member, PLAN_NUMBERS};
use crate::symmetry::{self, PointSetOnLine};
use crate::wspace::{enumerate_monomials, parse_uint_list, Monomial, WeightSystem, NVARS};

/// Default catalog path for `report` and `verdict`.
pub const CATALOG_ENV: &str = "WFANO_CATALOG";

#[derive(Parser, Debug)]
#[command(name = "wfano", version, about = "Quasismooth weighted Fano 3-fold hypersurfaces")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Seed for every random choice.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,
    /// Write output here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, ValueEnum)]
enum Format {
    Json,
    Markdown,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// All monomials of one weighted degree.
    Monomials {
        #[arg(long)]
        weights: String,
        #[arg(long)]
        degree: u32,
    },
    /// Membership predicates and basket of one septuple.
    Check(Family),
    /// Bounded search for accepted families.
    Classify(Bounds),
    /// Singular points of a general member.
    Basket(Family),
    /// Normalize a seeded general member of a family with a builtin plan.
    Normalize(Family),
    /// Diagonal automorphisms (and the full certificate where one exists).
    Autgroup(Family),
    /// Fractional-linear maps permuting a point set on the line.
    Stabilizer {
        /// Comma-separated rationals or `inf`, e.g. `0,1,-1,inf`.
        #[arg(long, allow_hyphen_values = true)]
        points: String,
    },
    /// Degree of irrationality for one septuple, or for the whole catalog.
    Verdict {
        #[arg(long)]
        septuple: Option<String>,
        #[arg(long)]
        weights: Option<String>,
        #[arg(long)]
        degree: Option<u32>,
        #[command(flatten)]
        bounds: Bounds,
    },
    /// Catalog table with verdicts; reads `WFANO_CATALOG` when set.
    Report(Bounds),
}

/// `--septuple a1,...,a5,d[,I]` or `--weights a1,...,a5 --degree d`.
#[derive(Args, Debug)]
struct Family {
    #[arg(long)]
    septuple: Option<String>,
    #[arg(long)]
    weights: Option<String>,
    #[arg(long)]
    degree: Option<u32>,
}

#[derive(Args, Debug)]
struct Bounds {
    /// Restrict to one Fano index.
    #[arg(long)]
    index: Option<u32>,
    #[arg(long)]
    max_weight: Option<u32>,
    #[arg(long)]
    max_degree: Option<u32>,
    /// Parallel search partitions; output order does not depend on it.
    #[arg(long, default_value_t = 1)]
    jobs: usize,
}

impl Bounds {
    fn search_bounds(&self) -> SearchBounds {
        let mut b = SearchBounds::default();
        if let Some(w) = self.max_weight {
            b.max_weight = w;
        }
        if let Some(d) = self.max_degree {
            b.max_degree = d;
        }
        match self.index {
            Some(i) => b.with_index(i),
            None => b,
        }
    }

    fn is_default(&self) -> bool {
        self.index.is_none() && self.max_weight.is_none() && self.max_degree.is_none()
    }
}

fn weight_system(septuple: Option<&str>, weights: Option<&str>, degree: Option<u32>) -> Result<WeightSystem> {
    match (septuple, weights, degree) {
        (Some(s), None, None) => WeightSystem::from_septuple(&parse_uint_list(s)?),
        (None, Some(w), Some(d)) => {
            let w = parse_uint_list(w)?;
            let a: [u32; NVARS] = w
                .as_slice()
                .try_into()
                .map_err(|_| Error::Usage(format!("--weights needs 5 integers, got {}", w.len())))?;
            WeightSystem::sorted(a, d)
        }
        _ => Err(Error::Usage("give either --septuple or both --weights and --degree".into())),
    }
}

impl Family {
    fn ws(&self) -> Result<WeightSystem> {
        weight_system(self.septuple.as_deref(), self.weights.as_deref(), self.degree)
    }
}

/// Output of one subcommand, rendered once the format is known.
struct Rendered {
    json: serde_json::Value,
    markdown: String,
}

fn pretty(v: &impl Serialize) -> Result<String> {
    let mut s = serde_json::to_string_pretty(v)?;
    s.push('\n');
    Ok(s)
}

fn record_for(ws: &WeightSystem) -> Result<FamilyRecord> {
    if let Some(r) = catalog::evaluate(ws) {
        return Ok(r);
    }
    let membership = membership_report(ws);
    let basket = singular_points_general(ws).unwrap_or_default();
    let terminal = basket.terminal_eligible() && basket.points.iter().all(|p| reid_tai_terminal(&p.singularity));
    Ok(FamilyRecord { ws: *ws, membership, basket, terminal, paper_number: catalog::paper_number(ws), verdict: None })
}

/// Catalog from `WFANO_CATALOG` when bounds are default, else a fresh search.
fn catalog_records(bounds: &Bounds) -> Result<Vec<FamilyRecord>> {
    if bounds.is_default() {
        if let Some(path) = std::env::var_os(CATALOG_ENV).filter(|p| !p.is_empty()) {
            return catalog::load_catalog(Path::new(&path));
        }
    }
    catalog::classify_with_jobs(&bounds.search_bounds(), bounds.jobs)
}

fn verdict_json(ws: &WeightSystem, v: &IrrationalityVerdict) -> serde_json::Value {
    json!({
        "septuple": ws.septuple().map(|x| x.to_string()),
        "values": v.values.iter().map(ToString::to_string).collect::<Vec<_>>(),
        "generalOnly": v.general_only,
        "justification": v.justification,
    })
}

fn verdict_line(ws: &WeightSystem, v: &IrrationalityVerdict) -> String {
    let rules: Vec<&str> = v.justification.iter().map(|j| j.rule.as_str()).collect();
    let general = if v.general_only { " (general member)" } else { "" };
    format!("- {ws}: d(X) ∈ {}{general}; {}\n", v.values_string(), rules.join(", "))
}

fn monomials(weights: &str, degree: u32) -> Result<Rendered> {
    let w = parse_uint_list(weights)?;
    let a: [u32; NVARS] =
        w.as_slice().try_into().map_err(|_| Error::Usage(format!("--weights needs 5 integers, got {}", w.len())))?;
    let ws = WeightSystem::sorted(a, degree)?;
    let list: Vec<String> = enumerate_monomials(&ws, degree).iter().map(Monomial::to_string).collect();
    let mut md = format!("Degree {degree} monomials of P{:?}: {}\n\n", ws.weights(), list.len());
    for m in &list {
        md.push_str(&format!("- `{m}`\n"));
    }
    Ok(Rendered {
        json: json!({
            "weights": ws.weights().map(|x| x.to_string()),
            "degree": degree.to_string(),
            "count": list.len().to_string(),
            "monomials": list,
        }),
        markdown: md,
    })
}

fn check(ws: &WeightSystem) -> Result<Rendered> {
    let r = record_for(ws)?;
    let text = catalog::catalog_to_string(std::slice::from_ref(&r))?;
    let m = &r.membership;
    let mut md = catalog::markdown_verdicts(std::slice::from_ref(&r));
    md.push('\n');
    for (name, v) in [
        ("wps well-formed", m.wps_well_formed),
        ("hypersurface well-formed", m.hypersurface_well_formed),
        ("linear cone", m.linear_cone),
        ("quasismooth (general)", m.quasismooth_general),
        ("terminal", r.terminal),
        ("accepted", r.accepted()),
    ] {
        md.push_str(&format!("- {name}: {v}\n"));
    }
    for f in &m.failing_strata {
        md.push_str(&format!("- failing stratum {}: {}\n", f.stratum, f.reason));
    }
    Ok(Rendered { json: serde_json::from_str(&text)?, markdown: md })
}

fn basket(ws: &WeightSystem) -> Result<Rendered> {
    let b = singular_points_general(ws)?;
    let points: Vec<_> = b
        .points
        .iter()
        .map(|p| {
            json!({
                "stratum": p.stratum.to_string(),
                "count": p.count.to_string(),
                "type": p.singularity.to_string(),
                "reidTai": reid_tai_terminal(&p.singularity),
            })
        })
        .collect();
    let mut md = String::from("| stratum | count | type | Reid–Tai |\n|---|---|---|---|\n");
    for p in &b.points {
        md.push_str(&format!(
            "| {} | {} | {} | {} |\n",
            p.stratum,
            p.count,
            p.singularity,
            reid_tai_terminal(&p.singularity)
        ));
    }
    for s in &b.non_isolated {
        md.push_str(&format!("\nNon-isolated along {s}\n"));
    }
    Ok(Rendered {
        json: json!({
            "septuple": ws.septuple().map(|x| x.to_string()),
            "points": points,
            "nonIsolated": b.non_isolated.iter().map(ToString::to_string).collect::<Vec<_>>(),
        }),
        markdown: md,
    })
}

fn plan_number(ws: &WeightSystem) -> Result<u32> {
    catalog::paper_number(ws)
        .filter(|n| PLAN_NUMBERS.contains(n))
        .ok_or_else(|| Error::Unsupported(format!("{ws} has no builtin normalization plan")))
}

fn normalize(ws: &WeightSystem, seed: u64) -> Result<Rendered> {
    let n = plan_number(ws)?;
    let member = normalized_member(n, seed)?;
    let f = &member.normalized.polynomial;
    let got: BTreeSet<String> = f.support().iter().map(Monomial::to_string).collect();
    let table: BTreeSet<String> = golden_table(n).unwrap_or_default().iter().map(|s| s.to_string()).collect();
    let extra: Vec<&String> = got.difference(&table).collect();
    let missing: Vec<&String> = table.difference(&got).collect();
    let subs: Vec<String> = member.normalized.substitutions.iter().map(ToString::to_string).collect();
    let mut md =
        format!("Family {n} {ws}, seed {seed}, {} draw(s)\n\n| monomial | coefficient |\n|---|---|\n", member.attempts);
    for (m, c) in f.terms() {
        md.push_str(&format!("| {m} | {} |\n", crate::exactmath::fmt_rational(c)));
    }
    md.push_str(&format!("\nMatches printed table: {}\n", extra.is_empty() && missing.is_empty()));
    for e in &extra {
        md.push_str(&format!("- extra {e}\n"));
    }
    for m in &missing {
        md.push_str(&format!("- missing {m}\n"));
    }
    Ok(Rendered {
        json: json!({
            "paperNumber": n.to_string(),
            "septuple": ws.septuple().map(|x| x.to_string()),
            "seed": seed.to_string(),
            "attempts": member.attempts.to_string(),
            "original": member.original.to_string(),
            "normalized": f.to_string(),
            "support": got,
            "substitutions": subs,
            "genericityChecks": member.checks,
            "table": {"matches": extra.is_empty() && missing.is_empty(), "extra": extra, "missing": missing},
        }),
        markdown: md,
    })
}

fn autgroup(ws: &WeightSystem, seed: u64) -> Result<Rendered> {
    if let Some(n) = catalog::paper_number(ws).filter(|n| PLAN_NUMBERS.contains(n)) {
        let c = symmetry::certify_trivial_automorphisms(n, seed)?;
        let mut md = format!("Family {n} {}: trivial = {}\n\n", c.weights, c.trivial);
        md.push_str(&format!(
            "- diagonal group: free rank {}, torsion {:?}, induced trivial {}\n",
            c.diagonal.free_rank, c.diagonal.torsion, c.diagonal.induced_trivial
        ));
        md.push_str(&format!("- diagonal involution: {}\n", c.involution.present));
        for p in &c.point_sets {
            md.push_str(&format!(
                "- points of {} on P^1: {{{}}}, stabilizer order {}\n",
                p.forms.join(" * "),
                p.points.join(", "),
                p.stabilizer.len()
            ));
        }
        return Ok(Rendered { json: serde_json::to_value(&c)?, markdown: md });
    }
    // No normal form: the full degree-d support of a general member.
    let support: BTreeSet<Monomial> = enumerate_monomials(ws, ws.degree()).into_iter().collect();
    if support.is_empty() {
        return Err(Error::Precondition(format!("{ws} has no monomials of degree {}", ws.degree())));
    }
    let g = symmetry::diagonal_symmetry_group(&support, ws)?;
    let inv = symmetry::has_diagonal_involution(&support, ws)?;
    let md = format!(
        "{ws}, full support ({} monomials)\n\n- diagonal group: free rank {}, torsion {:?}, induced trivial {}\n- diagonal involution: {}\n",
        support.len(),
        g.free_rank,
        g.torsion,
        g.induced_trivial,
        inv.present
    );
    Ok(Rendered {
        json: json!({
            "septuple": ws.septuple().map(|x| x.to_string()),
            "support": "full",
            "diagonal": g,
            "involution": inv,
        }),
        markdown: md,
    })
}

fn stabilizer(points: &str) -> Result<Rendered> {
    let set = PointSetOnLine::parse(points)?;
    let group = symmetry::pgl2_set_stabilizer(&set)?;
    let mut md = format!("Stabilizer of {set}: order {}\n\n", group.len());
    for g in &group {
        md.push_str(&format!("- {g}\n"));
    }
    Ok(Rendered {
        json: json!({
            "points": set.points().iter().map(ToString::to_string).collect::<Vec<_>>(),
            "order": group.len().to_string(),
            "maps": group,
        }),
        markdown: md,
    })
}

fn verdict(ws: Option<WeightSystem>, bounds: &Bounds) -> Result<Rendered> {
    if let Some(ws) = ws {
        let v = irrational::decide_septuple(&ws)?;
        return Ok(Rendered { json: verdict_json(&ws, &v), markdown: verdict_line(&ws, &v) });
    }
    let records = catalog_records(bounds)?;
    let mut rows = Vec::new();
    let mut md = String::new();
    for r in &records {
        let v = match &r.verdict {
            Some(v) => v.clone(),
            None => irrational::decide(r)?,
        };
        rows.push(verdict_json(&r.ws, &v));
        md.push_str(&verdict_line(&r.ws, &v));
    }
    Ok(Rendered { json: serde_json::Value::Array(rows), markdown: md })
}

fn classify(bounds: &Bounds) -> Result<Rendered> {
    let records = catalog::classify_with_jobs(&bounds.search_bounds(), bounds.jobs)?;
    Ok(Rendered {
        json: serde_json::from_str(&catalog::catalog_to_string(&records)?)?,
        markdown: catalog::markdown_verdicts(&records),
    })
}

fn report(bounds: &Bounds) -> Result<Rendered> {
    let records = catalog_records(bounds)?;
    Ok(Rendered {
        json: serde_json::from_str(&catalog::catalog_to_string(&records)?)?,
        markdown: catalog::markdown_verdicts(&records),
    })
}

fn execute(cli: &Cli) -> Result<String> {
    let rendered = match &cli.command {
        Command::Monomials { weights, degree } => monomials(weights, *degree)?,
        Command::Check(f) => check(&f.ws()?)?,
        Command::Classify(b) => classify(b)?,
        Command::Basket(f) => basket(&f.ws()?)?,
        Command::Normalize(f) => normalize(&f.ws()?, cli.seed)?,
        Command::Autgroup(f) => autgroup(&f.ws()?, cli.seed)?,
        Command::Stabilizer { points } => stabilizer(points)?,
        Command::Verdict { septuple, weights, degree, bounds } => {
            let ws = if septuple.is_none() && weights.is_none() && degree.is_none() {
                None
            } else {
                Some(weight_system(septuple.as_deref(), weights.as_deref(), *degree)?)
            };
            verdict(ws, bounds)?
        }
        Command::Report(b) => report(b)?,
    };
    let default = if matches!(cli.command, Command::Report(_)) { Format::Markdown } else { Format::Json };
    match cli.format.unwrap_or(default) {
        Format::Json => pretty(&rendered.json),
        Format::Markdown => Ok(rendered.markdown),
    }
}

/// Runs with explicit output streams; returns the exit status.
pub fn run_with<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().ansi().to_string();
            let _ = if code == 0 { stdout.write_all(text.as_bytes()) } else { stderr.write_all(text.as_bytes()) };
            return code;
        }
    };
    let result = execute(&cli).and_then(|text| match &cli.out {
        Some(path) => std::fs::write(path, &text).map_err(Error::from),
        None => stdout.write_all(text.as_bytes()).map_err(Error::from),
    });
    match result {
        Ok(()) => 0,
        Err(e) => {
            let code = if matches!(e, Error::Usage(_)) { 2 } else { 1 };
            let body = json!({"error": e.kind(), "message": e.to_string()});
            let _ = writeln!(stderr, "{body}");
            code
        }
    }
}

pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    run_with(args, &mut std::io::stdout().lock(), &mut std::io::stderr().lock())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let code = run_with(std::iter::once("wfano").chain(args.iter().copied()), &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn monomials_json() {
        let (code, out, _) = call(&["monomials", "--weights", "1,1,1,1,1", "--degree", "2"]);
        assert_eq!(code, 0);
        let v: serde_json::Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["count"], "15");
    }

    #[test]
    fn verdict_for_84() {
        let (code, out, _) = call(&["verdict", "--septuple", "1,7,8,9,12,36"]);
        assert_eq!(code, 0);
        let v: serde_json::Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["values"], json!(["3"]));
        assert_eq!(v["generalOnly"], true);
    }

    #[test]
    fn exit_codes() {
        assert_eq!(call(&["frobnicate"]).0, 2);
        assert_eq!(call(&["monomials", "--weights", "1,1,1,1,1", "--degree", "2", "--bogus"]).0, 2);
        assert_eq!(call(&["check"]).0, 2);
        let (code, _, err) = call(&["verdict", "--septuple", "1,1,1,1,1,7"]);
        assert_eq!(code, 1);
        let e: serde_json::Value = serde_json::from_str(err.trim()).unwrap();
        assert_eq!(e["error"], "not-in-catalog");
        assert_eq!(call(&["--help"]).0, 0);
    }

    #[test]
    fn stabilizer_markdown() {
        let (code, out, _) = call(&["stabilizer", "--points", "0,1,inf", "--format", "markdown"]);
        assert_eq!(code, 0);
        assert!(out.starts_with("Stabilizer of {0, 1, inf}: order 6"));
    }
}
