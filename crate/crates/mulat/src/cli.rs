//! Argument parsing and verb dispatch.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use anyhow::{Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use mulat_core::congruence::{self, check_parikh_connectivity, congruence_from_s, d_closed_sets, JiSet};
use mulat_core::irreducibles::{count_ji, enumerate_ji, enumerate_mi, kappa, kappa_d, DGraph, IrrVector};
use mulat_core::lattice::{fixtures, sd_eval, FiniteLattice};
use mulat_core::multinomial::{enumerate, to_finite_lattice, MultVector, Multinomial, PathWord};
use mulat_core::sd_engine::{perm_witness, psi, theorem_check, Method};
use mulat_core::Caps;

use crate::formats;

#[derive(Parser, Debug)]
#[command(name = "mulat", version, about = "Multinomial lattices, join dependency and SD_n(meet)")]
struct Cli {
    #[command(flatten)]
    caps: CapArgs,
    #[command(subcommand)]
    verb: Verb,
}

#[derive(Args, Debug)]
struct CapArgs {
    /// Largest word length to materialize
    #[arg(long, global = true, default_value_t = Caps::default().max_k)]
    max_k: usize,
    /// Largest lattice to materialize
    #[arg(long, global = true, default_value_t = Caps::default().max_elements)]
    max_elements: usize,
    /// Largest number of join irreducibles for congruence enumeration
    #[arg(long, global = true, default_value_t = Caps::default().max_ji)]
    max_ji: usize,
}

#[derive(Args, Debug)]
struct VArg {
    /// Multiplicity vector, e.g. 2,1,1
    #[arg(short = 'v', long = "vector", value_parser = parse_vector)]
    v: MultVector,
}

fn parse_vector(s: &str) -> std::result::Result<MultVector, String> {
    s.parse::<MultVector>().map_err(|e| e.to_string())
}

#[derive(Subcommand, Debug)]
enum Verb {
    /// List the words of L(v) in lexicographic order
    Elements {
        #[command(flatten)]
        v: VArg,
        /// Print only the number of elements
        #[arg(long)]
        count: bool,
    },
    /// Compare two words: prints <, >, = or ||
    Order {
        #[command(flatten)]
        v: VArg,
        a: String,
        b: String,
    },
    Join {
        #[command(flatten)]
        v: VArg,
        a: String,
        b: String,
    },
    Meet {
        #[command(flatten)]
        v: VArg,
        a: String,
        b: String,
    },
    /// Join irreducibles as `vector<TAB>word`
    Ji {
        #[command(flatten)]
        v: VArg,
        #[arg(long)]
        count: bool,
    },
    /// Meet irreducibles as `vector<TAB>word`
    Mi {
        #[command(flatten)]
        v: VArg,
        #[arg(long)]
        count: bool,
    },
    /// kappa of a join irreducible word, or kappa^d of a meet irreducible one
    Kappa {
        #[command(flatten)]
        v: VArg,
        word: String,
        #[arg(long)]
        dual: bool,
    },
    /// The join dependency graph on join irreducibles
    Dgraph {
        #[command(flatten)]
        v: VArg,
        #[arg(long, conflicts_with = "json")]
        dot: bool,
        #[arg(long)]
        json: bool,
    },
    /// D-closed sets of join irreducibles, one per line
    Congruences {
        #[command(flatten)]
        v: VArg,
        #[arg(long)]
        count: bool,
    },
    /// Equivalence classes of the congruence given by a D-closed set
    Classes {
        #[command(flatten)]
        v: VArg,
        /// Semicolon-separated vectors, e.g. "0,3;1,2"; "-" is empty
        #[arg(short = 'S', long = "set", allow_hyphen_values = true)]
        s: String,
        #[arg(long)]
        json: bool,
    },
    /// Quotient lattice by the congruence of a D-closed set
    Quotient {
        #[command(flatten)]
        v: VArg,
        #[arg(short = 'S', long = "set", allow_hyphen_values = true)]
        s: String,
        #[arg(long, conflicts_with = "json")]
        dot: bool,
        #[arg(long)]
        json: bool,
    },
    /// Evaluate SD_n(meet) on the permutation witness or exhaustively
    Sd {
        #[command(flatten)]
        v: VArg,
        #[arg(short = 'n', long)]
        n: usize,
        #[arg(long, conflicts_with = "exhaustive")]
        witness: bool,
        #[arg(long)]
        exhaustive: bool,
    },
    /// Check that L(v) fails SD_{dim-2}(meet) and satisfies SD_{dim-1}(meet)
    Theorem {
        #[command(flatten)]
        v: VArg,
        #[arg(long, value_enum)]
        method: Option<MethodArg>,
    },
    /// Analyse a finite lattice given as a cover file
    Lattice {
        #[arg(long)]
        covers: PathBuf,
        /// Check SD_n(meet) and extract a D-path from a failure
        #[arg(long)]
        sd: Option<usize>,
        /// Work in the order dual
        #[arg(long)]
        dual: bool,
        /// Print the Hasse diagram as DOT instead of the summary
        #[arg(long)]
        dot: bool,
        /// Also count congruences
        #[arg(long)]
        congruences: bool,
    },
    /// Write the built-in fixtures as cover files
    SeedFixtures {
        /// Target directory; without it the files go to stdout
        #[arg(long)]
        dir: Option<PathBuf>,
        /// Also write the unverified Jónsson-Nation reading as jn.cov
        #[arg(long)]
        unverified: bool,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum MethodArg {
    Exhaustive,
    DpathBound,
}

/// Runs one command line. Returns the process exit code: 0 on success, 1
/// on a domain error, 2 on a usage error.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                let _ = write!(out, "{}", e.render());
                return 0;
            }
            let _ = write!(err, "{}", e.render());
            return 2;
        }
    };
    let caps = Caps { max_k: cli.caps.max_k, max_elements: cli.caps.max_elements, max_ji: cli.caps.max_ji };
    match execute(cli.verb, &caps, out, err) {
        Ok(()) => 0,
        Err(e) => {
            let _ = writeln!(err, "error: {e:#}");
            1
        }
    }
}

fn word(v: &MultVector, s: &str) -> Result<PathWord> {
    Ok(PathWord::parse(v, s)?)
}

fn irr_line(x: &IrrVector) -> String {
    let xs: Vec<String> = x.x().iter().map(usize::to_string).collect();
    format!("{}\t{}", xs.join(","), x.word())
}

fn execute(verb: Verb, caps: &Caps, out: &mut dyn Write, err: &mut dyn Write) -> Result<()> {
    match verb {
        Verb::Elements { v: VArg { v }, count } => {
            if count {
                let n = v.lattice_size().context("lattice size overflows")?;
                writeln!(out, "{n}")?;
            } else {
                for w in enumerate(&v, caps)? {
                    writeln!(out, "{w}")?;
                }
            }
        }
        Verb::Order { v: VArg { v }, a, b } => {
            let (a, b) = (word(&v, &a)?, word(&v, &b)?);
            let rel = match (a.leq(&b)?, b.leq(&a)?) {
                (true, true) => "=",
                (true, false) => "<",
                (false, true) => ">",
                (false, false) => "||",
            };
            writeln!(out, "{rel}")?;
        }
        Verb::Join { v: VArg { v }, a, b } => writeln!(out, "{}", word(&v, &a)?.join(&word(&v, &b)?)?)?,
        Verb::Meet { v: VArg { v }, a, b } => writeln!(out, "{}", word(&v, &a)?.meet(&word(&v, &b)?)?)?,
        Verb::Ji { v: VArg { v }, count } => {
            if count {
                writeln!(out, "{}", count_ji(&v))?;
            } else {
                for x in enumerate_ji(&v) {
                    writeln!(out, "{}", irr_line(&x))?;
                }
            }
        }
        Verb::Mi { v: VArg { v }, count } => {
            if count {
                writeln!(out, "{}", count_ji(&v))?;
            } else {
                for x in enumerate_mi(&v) {
                    writeln!(out, "{}", irr_line(&x))?;
                }
            }
        }
        Verb::Kappa { v: VArg { v }, word: w, dual } => {
            let w = word(&v, &w)?;
            let r = if dual { kappa_d(&IrrVector::from_mi_word(&w)?)? } else { kappa(&IrrVector::from_ji_word(&w)?)? };
            writeln!(out, "{}", r.word())?;
        }
        Verb::Dgraph { v: VArg { v }, dot, json } => {
            let g = DGraph::new(&v);
            if dot {
                write!(out, "{}", formats::dgraph_dot(&g))?;
            } else if json {
                writeln!(out, "{}", serde_json::to_string_pretty(&formats::dgraph_json(&g))?)?;
            } else {
                for &(a, b, t) in &g.edges {
                    writeln!(out, "{} -> {} {t}", g.nodes[a], g.nodes[b])?;
                }
            }
        }
        Verb::Congruences { v: VArg { v }, count } => {
            let sets = d_closed_sets(&v, caps)?;
            if count {
                writeln!(out, "{}", sets.len())?;
            } else {
                for s in sets {
                    writeln!(out, "{s}")?;
                }
            }
        }
        Verb::Classes { v: VArg { v }, s, json } => {
            let set = JiSet::parse(&v, &s)?;
            let p = congruence_from_s(&set, caps)?;
            if json {
                writeln!(out, "{}", serde_json::to_string_pretty(&formats::partition_json(&set, &p))?)?;
            } else {
                for b in &p.blocks {
                    let ws: Vec<String> = b.iter().map(PathWord::to_string).collect();
                    writeln!(out, "{}", ws.join(" "))?;
                }
                if !check_parikh_connectivity(&p) {
                    writeln!(err, "note: some class is not connected by adjacent swaps")?;
                }
            }
        }
        Verb::Quotient { v: VArg { v }, s, dot, json } => {
            let set = JiSet::parse(&v, &s)?;
            let q = congruence::quotient(&set, caps)?;
            if dot {
                write!(out, "{}", formats::hasse_dot(&q, "quotient"))?;
            } else if json {
                writeln!(out, "{}", serde_json::to_string_pretty(&formats::quotient_json(&q))?)?;
            } else {
                write!(out, "{}", formats::write_covers(&q))?;
            }
        }
        Verb::Sd { v: VArg { v }, n, witness, exhaustive: _ } => {
            if witness {
                sd_witness(&v, n, out)?;
            } else {
                let m = to_finite_lattice(&v, caps)?;
                match m.lattice.sd_failure(n) {
                    None => writeln!(out, "SD_{n}(meet) holds")?,
                    Some((x, y, z)) => {
                        writeln!(out, "SD_{n}(meet) fails at {} {} {}", m.words[x], m.words[y], m.words[z])?
                    }
                }
            }
        }
        Verb::Theorem { v: VArg { v }, method } => {
            let method = method.map(|m| match m {
                MethodArg::Exhaustive => Method::Exhaustive,
                MethodArg::DpathBound => Method::DPathBound,
            });
            if matches!(method, Some(Method::Exhaustive)) && v.dimension() >= 5 {
                writeln!(err, "warning: exhaustive scan in dimension {} is cubic in |L(v)|", v.dimension())?;
            }
            let r = theorem_check(&v, method, caps)?;
            writeln!(out, "{}", serde_json::to_string_pretty(&formats::report_json(&r))?)?;
        }
        Verb::Lattice { covers, sd, dual, dot, congruences } => {
            let l = formats::read_covers(&covers)?;
            let l = if dual { l.dual() } else { l };
            if dot {
                write!(out, "{}", formats::hasse_dot(&l, "L"))?;
            } else {
                lattice_summary(&l, sd, congruences, out)?;
            }
        }
        Verb::SeedFixtures { dir, unverified } => {
            let mut all = fixtures::named();
            if unverified {
                all.push(("jn", fixtures::jn_unverified()));
            }
            for (name, l) in all {
                let text = format!("# {name}\n{}", formats::write_covers(&l));
                match &dir {
                    Some(d) => {
                        let p = d.join(format!("{name}.cov"));
                        std::fs::write(&p, text).with_context(|| format!("cannot write {}", p.display()))?;
                        writeln!(out, "{}", p.display())?;
                    }
                    None => writeln!(out, "{text}")?,
                }
            }
        }
    }
    Ok(())
}

fn sd_witness(v: &MultVector, n: usize, out: &mut dyn Write) -> Result<()> {
    let vn = v.normalized();
    let t = perm_witness(vn.dimension())?;
    let img = |s: &mulat_core::perm::InversionSet| -> Result<PathWord> { Ok(psi(&vn, &s.to_permutation()?)?) };
    let (x, y, z) = (img(&t.x)?, img(&t.y)?, img(&t.z)?);
    let lat = Multinomial { v: vn.clone() };
    writeln!(out, "x = {x}\ny = {y}\nz = {z}")?;
    for (name, a, b) in [("(x,y,z)", &y, &z), ("(x,z,y)", &z, &y)] {
        let tr = sd_eval(&lat, &x, a, b, n);
        let verdict = if tr.holds() { "holds" } else { "fails" };
        writeln!(out, "SD_{n}(meet) {verdict} on {name}: x ∧ y_{n} = {}, x ∧ (y ∨ z) = {}", tr.lhs, tr.rhs)?;
    }
    Ok(())
}

fn labels(l: &FiniteLattice, es: &[usize]) -> String {
    es.iter().map(|&e| l.label(e)).collect::<Vec<_>>().join(" ")
}

fn lattice_summary(l: &FiniteLattice, sd: Option<usize>, congruences: bool, out: &mut dyn Write) -> Result<()> {
    writeln!(out, "elements: {}", l.len())?;
    writeln!(out, "join irreducibles: {}", labels(l, &l.join_irreducibles()))?;
    writeln!(out, "meet irreducibles: {}", labels(l, &l.meet_irreducibles()))?;
    writeln!(out, "distributive: {}", l.is_distributive())?;
    writeln!(out, "meet semidistributive: {}", l.is_meet_semidistributive())?;
    writeln!(out, "semidistributive: {}", l.is_semidistributive())?;
    writeln!(out, "bounded: {}", l.is_bounded())?;
    let d: Vec<String> = l.d_relation().iter().map(|&(a, b)| format!("{}->{}", l.label(a), l.label(b))).collect();
    writeln!(out, "D: {}", d.join(" "))?;
    if l.d_is_acyclic() {
        writeln!(out, "longest D-path: {}", l.longest_d_path().0)?;
    }
    if congruences {
        writeln!(out, "congruences: {}", l.all_congruences().len())?;
    }
    if let Some(n) = sd {
        match l.sd_failure(n) {
            None => writeln!(out, "SD_{n}(meet) holds")?,
            Some((x, y, z)) => {
                writeln!(out, "SD_{n}(meet) fails at {}", labels(l, &[x, y, z]))?;
                if l.is_meet_semidistributive() {
                    let w = l.dpath_from_sd_failure(x, y, z, n)?;
                    writeln!(out, "D-path: {}", w.path.iter().map(|&e| l.label(e)).collect::<Vec<_>>().join(" -> "))?;
                }
            }
        }
    }
    Ok(())
}
