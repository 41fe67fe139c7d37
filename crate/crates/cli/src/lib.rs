//! Commands behind the `kreweras` binary.
//!
//! Every command renders its whole output into a [`Output`] before anything
//! is printed, so a failing command never leaves half a document on stdout.

pub mod render;

use std::fmt::Write;
use std::ops::RangeInclusive;

use kreweras_core::count::brute_force_counts;
use kreweras_core::orbit::{kappa_orbit, orbit_table_capped, predicted_orbit_table};
use kreweras_core::sieve::csp_verify_capped;
use kreweras_core::verify::{verify, VerifyOptions};
use kreweras_core::{
    enumerate_nc_capped, enumerate_trees_capped, kreweras, phi, Cap, CountReport, Error,
    NoncrossingPartition, OrbitTable, PlaneTree, Result,
};
use num_bigint::BigUint;
use serde::Serialize;
use serde_json::{json, Value};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Format {
    #[default]
    Text,
    Structured,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EnumerateKind {
    Partitions,
    Trees,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RenderKind {
    Tree,
    Partition,
    Meander,
}

#[derive(Debug, Clone, Copy)]
pub struct Config {
    pub format: Format,
    pub cap: Cap,
}

/// What a command printed, and whether everything it checked held.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Output {
    pub stdout: String,
    pub ok: bool,
}

impl Output {
    fn ok(stdout: String) -> Self {
        Self { stdout, ok: true }
    }
}

pub const EXIT_OK: u8 = 0;
pub const EXIT_FAILED: u8 = 1;
pub const EXIT_USAGE: u8 = 2;
pub const EXIT_CAP: u8 = 3;

/// Exit status for an error raised by a command.
pub fn exit_code(e: &Error) -> u8 {
    match e {
        Error::ResourceLimit { .. } => EXIT_CAP,
        Error::Inconsistency(_) => EXIT_FAILED,
        _ => EXIT_USAGE,
    }
}

/// Parses `A..B`, `A..=B` (both inclusive) or a single `N`.
pub fn parse_range(s: &str) -> std::result::Result<RangeInclusive<usize>, String> {
    let bad = || format!("expected N, A..B or A..=B, got {s:?}");
    let num = |t: &str| t.trim().parse::<usize>().map_err(|_| bad());
    match s.split_once("..") {
        None => num(s).map(|n| n..=n),
        Some((a, b)) => {
            let (a, b) = (num(a)?, num(b.strip_prefix('=').unwrap_or(b))?);
            if a > b {
                return Err(format!("empty range {s:?}"));
            }
            Ok(a..=b)
        }
    }
}

fn json_error(e: serde_json::Error) -> Error {
    Error::Parse(e.to_string())
}

/// Text form `1,3/2` or the structured form `{"n": 3, "blocks": [[1,3],[2]]}`.
pub fn parse_partition(s: &str, n: Option<usize>) -> Result<NoncrossingPartition> {
    let s = s.trim();
    let p: NoncrossingPartition = if s.starts_with('{') {
        serde_json::from_str(s).map_err(json_error)?
    } else {
        s.parse()?
    };
    match n {
        Some(n) if n != p.n() => Err(Error::SizeMismatch {
            left: n,
            right: p.n(),
        }),
        _ => Ok(p),
    }
}

/// A Dyck word or the structured form `{"n": 2, "edges": [[1,4],[2,3]]}`.
pub fn parse_tree(s: &str) -> Result<PlaneTree> {
    let s = s.trim();
    if s.starts_with('{') {
        serde_json::from_str(s).map_err(json_error)
    } else {
        s.parse()
    }
}

fn document(v: &impl Serialize) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("serialisable");
    s.push('\n');
    s
}

fn lines<I: IntoIterator<Item = String>>(items: I) -> String {
    items.into_iter().map(|l| l + "\n").collect()
}

/// `{8:1, 4:1, 2:1}`, longest orbits first.
pub fn table_text(t: &OrbitTable) -> String {
    let body: Vec<String> = t.entries().map(|(l, c)| format!("{l}:{c}")).collect();
    format!("{{{}}}", body.join(", "))
}

pub fn cmd_enumerate(cfg: &Config, n: usize, kind: EnumerateKind) -> Result<Output> {
    let (items, values): (Vec<String>, Vec<Value>) = match kind {
        EnumerateKind::Partitions => enumerate_nc_capped(n, cfg.cap)?
            .map(|p| (p.to_string(), json!(p)))
            .unzip(),
        EnumerateKind::Trees => enumerate_trees_capped(n, cfg.cap)?
            .map(|t| (t.to_dyck(), json!(t)))
            .unzip(),
    };
    Ok(Output::ok(match cfg.format {
        Format::Text => lines(items),
        Format::Structured => {
            let kind = match kind {
                EnumerateKind::Partitions => "partitions",
                EnumerateKind::Trees => "trees",
            };
            document(&json!({ "n": n, "kind": kind, "count": values.len(), "items": values }))
        }
    }))
}

/// `κ(p), κ²(p), ..., κ^k(p)`.
pub fn cmd_complement(cfg: &Config, p: &NoncrossingPartition, k: usize) -> Result<Output> {
    let mut iterates = Vec::with_capacity(k);
    let mut x = p.clone();
    for _ in 0..k {
        x = kreweras(&x);
        iterates.push(x.clone());
    }
    Ok(Output::ok(match cfg.format {
        Format::Text => lines(iterates.iter().map(ToString::to_string)),
        Format::Structured => document(&json!({ "input": p, "iterate": k, "iterates": iterates })),
    }))
}

/// The orbit of one partition under κ.
pub fn cmd_orbit_of(cfg: &Config, p: &NoncrossingPartition) -> Result<Output> {
    let orbit = kappa_orbit(p);
    Ok(Output::ok(match cfg.format {
        Format::Text => {
            let mut s = format!("length {}\n", orbit.len());
            s.push_str(&lines(orbit.iter().map(ToString::to_string)));
            s
        }
        Format::Structured => {
            document(&json!({ "input": p, "length": orbit.len(), "orbit": orbit }))
        }
    }))
}

/// Orbit table of NC(n), checked against the prediction from planar-tree counts.
pub fn cmd_orbit_table(cfg: &Config, n: usize, representatives: bool) -> Result<Output> {
    let mut table = orbit_table_capped(n, cfg.cap)?;
    let predicted = predicted(n)?;
    let ok = table.same_counts(&predicted);
    if !representatives {
        table = table.without_representatives();
    }
    let stdout = match cfg.format {
        Format::Text => {
            let mut s = format!(
                "n={n} orbits {} (predicted {})\n",
                table_text(&table),
                table_text(&predicted)
            );
            s.push_str("length\tcount\n");
            for (l, c) in table.entries() {
                let _ = write!(s, "{l}\t{c}");
                if let Some(reps) = table.representatives(l) {
                    let words: Vec<String> = reps.iter().map(PlaneTree::to_dyck).collect();
                    let _ = write!(s, "\t{}", words.join(" "));
                }
                s.push('\n');
            }
            s
        }
        Format::Structured => {
            document(&json!({ "table": table, "predicted": predicted, "match": ok }))
        }
    };
    Ok(Output { stdout, ok })
}

/// The prediction is stated for `n >= 2`; NC(1) is a single fixed point.
fn predicted(n: usize) -> Result<OrbitTable> {
    if n == 1 {
        Ok(OrbitTable::from_counts(1, [(1, BigUint::from(1u32))]))
    } else {
        predicted_orbit_table(n)
    }
}

pub fn cmd_counts(cfg: &Config, range: RangeInclusive<usize>, brute: bool) -> Result<Output> {
    let mut ok = true;
    let mut rows = Vec::new();
    let mut text = String::from("n\tC_n\trootPT\tasymRootPT\tPT\tasymPT\torbits");
    if brute {
        text.push_str("\tbrute\tmatch");
    }
    text.push('\n');
    for n in range {
        let r = CountReport::new(n)?;
        let orbits = predicted(n)?;
        let _ = write!(
            text,
            "{}\t{}\t{}\t{}\t{}\t{}\t{}",
            n,
            r.catalan,
            r.rooted_planar,
            r.asym_rooted_planar,
            r.planar,
            r.asym_planar,
            table_text(&orbits)
        );
        let mut row = json!(r);
        row["orbits"] = json!(orbits);
        if brute {
            let b = brute_force_counts(n, cfg.cap)?;
            let matched = r.rooted_planar == b.rooted_planar.into()
                && r.asym_rooted_planar == b.asym_rooted_planar.into()
                && r.planar == b.planar.into()
                && r.asym_planar == b.asym_planar.into();
            ok &= matched;
            let _ = write!(
                text,
                "\t{}/{}/{}/{}\t{}",
                b.rooted_planar,
                b.asym_rooted_planar,
                b.planar,
                b.asym_planar,
                if matched { "ok" } else { "MISMATCH" }
            );
            row["brute"] = json!({
                "rootPT": b.rooted_planar,
                "asymRootPT": b.asym_rooted_planar,
                "PT": b.planar,
                "asymPT": b.asym_planar,
            });
            row["match"] = json!(matched);
        }
        text.push('\n');
        rows.push(row);
    }
    Ok(Output {
        stdout: match cfg.format {
            Format::Text => text,
            Format::Structured => document(&json!({ "rows": rows })),
        },
        ok,
    })
}

fn verdict(pass: bool) -> &'static str {
    if pass {
        "PASS"
    } else {
        "FAIL"
    }
}

pub fn cmd_csp(cfg: &Config, range: RangeInclusive<usize>) -> Result<Output> {
    let reports = range
        .map(|n| csp_verify_capped(n, cfg.cap))
        .collect::<Result<Vec<_>>>()?;
    let ok = reports.iter().all(|r| r.pass);
    let stdout = match cfg.format {
        Format::Structured => document(&json!({ "reports": reports, "pass": ok })),
        Format::Text => {
            let mut s = String::new();
            for r in &reports {
                let join = |v: &[num_bigint::BigInt]| {
                    v.iter()
                        .map(ToString::to_string)
                        .collect::<Vec<_>>()
                        .join(",")
                };
                let _ = writeln!(s, "n={} X(q) = {}", r.n, r.q_catalan);
                let _ = writeln!(
                    s,
                    "  X mod q^{} - 1: [{}]",
                    2 * r.n,
                    join(&r.condition2.residues)
                );
                let _ = writeln!(s, "  orbit tallies:  [{}]", join(&r.condition2.expected));
                let stab: Vec<String> = r
                    .condition2
                    .stabilizer_tallies
                    .iter()
                    .map(|(k, v)| format!("{k}:{v}"))
                    .collect();
                let _ = writeln!(s, "  stabilizers {{{}}}", stab.join(", "));
                for c in &r.condition1 {
                    let _ = writeln!(
                        s,
                        "  d={} rotation {} fixed {} {}",
                        c.d,
                        c.rotation,
                        c.fixed_points,
                        verdict(c.pass)
                    );
                }
                let _ = writeln!(
                    s,
                    "  condition 1 {}, condition 2 {}: {}",
                    verdict(r.condition1_pass),
                    verdict(r.condition2.pass),
                    verdict(r.pass)
                );
            }
            s
        }
    };
    Ok(Output { stdout, ok })
}

pub fn cmd_verify(
    cfg: &Config,
    range: RangeInclusive<usize>,
    inject_fault: bool,
) -> Result<Output> {
    let mut options = VerifyOptions::new(range);
    options.cap = cfg.cap;
    options.inject_fault = inject_fault;
    let report = verify(&options)?;
    let stdout = match cfg.format {
        Format::Structured => document(&report),
        Format::Text => {
            let mut s = format!("verify n={}..={}\n", report.from, report.to);
            for f in &report.families {
                let _ = writeln!(
                    s,
                    "{:<22}{:>10} checks {:>6} failed  {}",
                    f.name,
                    f.checks,
                    f.failures,
                    verdict(f.pass())
                );
            }
            for (name, c) in report.counterexamples() {
                let _ = writeln!(s, "counterexample [{name}] {c}");
            }
            let _ = writeln!(s, "{}", verdict(report.pass));
            s
        }
    };
    Ok(Output {
        stdout,
        ok: report.pass,
    })
}

/// SVG for one object. A meander takes one tree, paired with its rerooting
/// unless a second tree is given.
pub fn cmd_render(
    kind: RenderKind,
    object: &str,
    second: Option<&str>,
    complement: bool,
) -> Result<Output> {
    let svg = match kind {
        RenderKind::Tree => render::render_tree(&parse_tree(object)?),
        RenderKind::Partition => {
            render::render_partition(&parse_partition(object, None)?, complement)
        }
        RenderKind::Meander => {
            let a = parse_tree(object)?;
            let b = match second {
                Some(s) => parse_tree(s)?,
                None => phi(&a),
            };
            render::render_meander(&a, &b)?
        }
    };
    Ok(Output::ok(svg))
}
