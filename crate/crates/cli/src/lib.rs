//! Argument parsing and dispatch for the `depthzero` binary.
//!
//! Exit codes: 0 on success, 1 on a domain error (message printed verbatim on
//! stderr), 2 on a usage error including malformed literals.

use std::ffi::OsString;
use std::fmt::Write;

use clap::{Parser, Subcommand, ValueEnum};
use depthzero::branching::{branch, branch_report, generic_branching};
use depthzero::hecke::{distinguished_reps, kl_polynomial, InducedModule};
use depthzero::multiseg::{
    elementary_ops, leq, partition_p, poset, zelevinsky_dual, DecompositionNumbers,
    DEFAULT_POSET_CAP,
};
use depthzero::partition::kostka_ssyt;
use depthzero::render;
use depthzero::symgroup::{character_table, Factor};
use depthzero::{Error, Multisegment, Partition, WeylElement};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum Format {
    #[default]
    Table,
    Json,
}

#[derive(Debug, Parser)]
#[command(name = "depthzero", version, about = "Depth-zero branching calculator for Iwahori-spherical representations of GL_n")]
pub struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Table)]
    pub format: Format,
    /// Largest support (number of points) accepted by poset computations.
    #[arg(long, global = true, default_value_t = DEFAULT_POSET_CAP)]
    pub cap: usize,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Partitions and dominance order.
    #[command(subcommand)]
    Partition(PartitionCmd),
    /// Number of semistandard tableaux of a shape and content.
    Kostka {
        #[arg(value_parser = parse_partition)]
        shape: Partition,
        #[arg(value_parser = parse_partition)]
        content: Partition,
    },
    /// Decomposition when no two segments are linked, from segment lengths.
    Generic {
        #[arg(value_parser = parse_lengths)]
        lengths: IntList,
    },
    /// Multisegment calculus.
    #[command(subcommand)]
    Mseg(MsegCmd),
    /// Decomposition number m(b;a).
    M {
        #[arg(value_parser = parse_multisegment)]
        b: Multisegment,
        #[arg(value_parser = parse_multisegment)]
        a: Multisegment,
    },
    /// Multiplicities of every constituent of the K_+-fixed vectors.
    Branch {
        #[arg(value_parser = parse_multisegment)]
        a: Multisegment,
        /// Print the full report (poset, m-matrix, coefficients, duality data).
        #[arg(long)]
        report: bool,
    },
    /// Kazhdan–Lusztig polynomial P_{x,w}.
    Kl {
        #[arg(long)]
        n: usize,
        #[arg(long, value_parser = parse_weyl)]
        x: WeylElement,
        #[arg(long, value_parser = parse_weyl)]
        w: WeylElement,
    },
    /// Hecke algebra utilities.
    #[command(subcommand)]
    Hecke(HeckeCmd),
    /// Symmetric group characters.
    #[command(subcommand)]
    Symgroup(SymgroupCmd),
}

#[derive(Debug, Subcommand)]
pub enum PartitionCmd {
    Conjugate {
        #[arg(value_parser = parse_partition)]
        lambda: Partition,
    },
    Dominates {
        #[arg(value_parser = parse_partition)]
        lambda: Partition,
        #[arg(value_parser = parse_partition)]
        mu: Partition,
    },
    /// All partitions of n, descending lexicographically.
    List { n: usize },
}

#[derive(Debug, Subcommand)]
pub enum MsegCmd {
    /// Every b ≤ a; DOT in table format, JSON otherwise.
    Poset {
        #[arg(value_parser = parse_multisegment)]
        a: Multisegment,
    },
    /// Results of one elementary operation.
    Ops {
        #[arg(value_parser = parse_multisegment)]
        a: Multisegment,
    },
    Leq {
        #[arg(value_parser = parse_multisegment)]
        b: Multisegment,
        #[arg(value_parser = parse_multisegment)]
        a: Multisegment,
    },
    /// Zelevinsky involution.
    Dual {
        #[arg(value_parser = parse_multisegment)]
        a: Multisegment,
    },
    /// Conjugate of the partition of segment lengths.
    P {
        #[arg(value_parser = parse_multisegment)]
        a: Multisegment,
    },
}

#[derive(Debug, Subcommand)]
pub enum HeckeCmd {
    /// Check quadratic and braid relations on every induced module of rank n.
    Verify {
        #[arg(long)]
        n: usize,
    },
    /// Distinguished coset representatives for the parabolic generated by J.
    Reps {
        #[arg(long)]
        n: usize,
        /// Comma-separated simple indices; empty for the trivial subgroup.
        #[arg(long, default_value = "", value_parser = parse_indices)]
        j: IntList,
    },
}

#[derive(Debug, Subcommand)]
pub enum SymgroupCmd {
    /// Character table of S_n.
    Table { n: usize },
}

fn parse_partition(s: &str) -> Result<Partition, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_multisegment(s: &str) -> Result<Multisegment, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_weyl(s: &str) -> Result<WeylElement, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

/// A comma-separated list of nonnegative integers.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntList(pub Vec<usize>);

fn parse_list(s: &str, what: &str) -> Result<Vec<usize>, String> {
    s.split(',')
        .filter(|t| !t.trim().is_empty())
        .map(|t| {
            t.trim()
                .parse::<usize>()
                .map_err(|_| format!("invalid literal `{s}`: `{}` is not a {what}", t.trim()))
        })
        .collect()
}

fn parse_lengths(s: &str) -> Result<IntList, String> {
    let v = parse_list(s, "positive integer")?;
    if v.is_empty() || v.contains(&0) {
        return Err(format!("invalid literal `{s}`: lengths must be positive"));
    }
    Ok(IntList(v))
}

fn parse_indices(s: &str) -> Result<IntList, String> {
    parse_list(s, "simple index").map(IntList)
}

/// Output of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            return if code == 0 {
                Outcome { code, stdout: text, stderr: String::new() }
            } else {
                Outcome { code, stdout: String::new(), stderr: text }
            };
        }
    };
    match execute(&cli) {
        Ok(Ok(stdout)) => Outcome { code: 0, stdout, stderr: String::new() },
        Ok(Err(Failure { stdout, message })) => Outcome { code: 1, stdout, stderr: format!("{message}\n") },
        Err(e) => Outcome { code: 1, stdout: String::new(), stderr: format!("{e}\n") },
    }
}

/// A check that ran to completion and failed.
struct Failure {
    stdout: String,
    message: String,
}

fn line(s: impl std::fmt::Display) -> String {
    format!("{s}\n")
}

fn execute(cli: &Cli) -> depthzero::Result<Result<String, Failure>> {
    let json = cli.format == Format::Json;
    let out = match &cli.command {
        Command::Partition(PartitionCmd::Conjugate { lambda }) => {
            let c = lambda.conjugate();
            if json { render::json(&c) } else { line(c) }
        }
        Command::Partition(PartitionCmd::Dominates { lambda, mu }) => line(lambda.dominates(mu)?),
        Command::Partition(PartitionCmd::List { n }) => {
            let all = Partition::all(*n);
            if json {
                render::json(&all)
            } else {
                all.iter().map(line).collect()
            }
        }
        Command::Kostka { shape, content } => line(kostka_ssyt(shape, content)?),
        Command::Generic { lengths } => {
            let r = generic_branching(&lengths.0)?;
            vector(&r.multiplicities, json)
        }
        Command::Mseg(cmd) => mseg(cmd, cli.cap, json)?,
        Command::M { b, a } => line(DecompositionNumbers::new().m(b, a)?),
        Command::Branch { a, report } => {
            if *report {
                let rep = branch_report(a, cli.cap)?;
                if json {
                    render::json(&rep)
                } else {
                    report_table(&rep)
                }
            } else {
                vector(&branch(a, cli.cap)?.multiplicities, json)
            }
        }
        Command::Kl { n, x, w } => {
            for e in [x, w] {
                if e.rank() != *n {
                    return Err(Error::RankMismatch(e.rank(), *n));
                }
            }
            let p = kl_polynomial(x, w)?;
            if json { render::json(&p) } else { line(p) }
        }
        Command::Hecke(HeckeCmd::Verify { n }) => return hecke_verify(*n),
        Command::Hecke(HeckeCmd::Reps { n, j }) => {
            let reps = distinguished_reps(*n, &j.0)?;
            if json {
                render::json(&reps)
            } else {
                reps.iter().map(line).collect()
            }
        }
        Command::Symgroup(SymgroupCmd::Table { n }) => {
            let t = character_table(*n);
            if json {
                render::json(&t)
            } else {
                let mut s = String::new();
                let header: Vec<String> = t.classes.iter().map(ToString::to_string).collect();
                writeln!(s, "irrep \\ class : {}", header.join(" | ")).unwrap();
                for (lam, row) in t.irreducibles.iter().zip(&t.values) {
                    let vals: Vec<String> = row.iter().map(ToString::to_string).collect();
                    writeln!(s, "{lam} : {}", vals.join(" | ")).unwrap();
                }
                s
            }
        }
    };
    Ok(Ok(out))
}

fn vector(v: &depthzero::PartitionVector, json: bool) -> String {
    if json {
        line(render::vector_json(v))
    } else {
        render::vector_table(v)
    }
}

fn mseg(cmd: &MsegCmd, cap: usize, json: bool) -> depthzero::Result<String> {
    Ok(match cmd {
        MsegCmd::Poset { a } => {
            let p = poset(a, cap)?;
            if json {
                let mut dn = DecompositionNumbers::new();
                let m: Vec<u64> = p
                    .nodes
                    .iter()
                    .map(|b| dn.m(b, a))
                    .collect::<depthzero::Result<_>>()?;
                render::poset_json(&p, &m)
            } else {
                render::poset_dot(&p)
            }
        }
        MsegCmd::Ops { a } => {
            let ops: Vec<String> = elementary_ops(a).iter().map(ToString::to_string).collect();
            if json {
                render::json(&ops)
            } else {
                ops.iter().map(line).collect()
            }
        }
        MsegCmd::Leq { b, a } => line(leq(b, a)?),
        MsegCmd::Dual { a } => {
            let d = zelevinsky_dual(a);
            if json { render::json(&d.to_string()) } else { line(d) }
        }
        MsegCmd::P { a } => {
            let p = partition_p(a)?;
            if json { render::json(&p) } else { line(p) }
        }
    })
}

fn report_table(rep: &depthzero::branching::BranchReport) -> String {
    let mut s = String::new();
    writeln!(s, "multisegment: {}", rep.multisegment).unwrap();
    writeln!(s, "P(a): {}", rep.top).unwrap();
    writeln!(s, "dual: {}", rep.dual).unwrap();
    writeln!(s, "P(dual)': {} (multiplicity {})", rep.dual_partition, rep.dual_partition_multiplicity).unwrap();
    let mins: Vec<String> = rep.minimal_constituents.iter().map(ToString::to_string).collect();
    writeln!(s, "minimal constituents: {}", mins.join(" ")).unwrap();
    writeln!(s, "poset: {} nodes, {} edges", rep.poset.len(), rep.poset.edges.len()).unwrap();
    writeln!(s, "standard expansion:").unwrap();
    for (b, c) in &rep.c_coefficients {
        writeln!(s, "  {b} : {c}").unwrap();
    }
    writeln!(s, "multiplicities:").unwrap();
    for l in render::vector_table(&rep.branch.multiplicities).lines() {
        writeln!(s, "  {l}").unwrap();
    }
    writeln!(s, "note: {}", rep.note).unwrap();
    s
}

fn hecke_verify(n: usize) -> depthzero::Result<Result<String, Failure>> {
    let mut out = String::new();
    let mut failed = 0usize;
    let mut total = 0usize;
    for lengths in compositions(n) {
        for mask in 0..1usize << lengths.len() {
            let factors: Vec<Factor> = (0..lengths.len())
                .map(|k| if mask >> k & 1 == 1 { Factor::Sign } else { Factor::Trivial })
                .collect();
            let module = InducedModule::from_blocks(&lengths, &factors)?;
            let ok = module.relations_hold()?;
            total += 1;
            if !ok {
                failed += 1;
            }
            let pattern: Vec<String> = lengths
                .iter()
                .zip(&factors)
                .map(|(l, f)| format!("{l}{}", if *f == Factor::Sign { "-" } else { "+" }))
                .collect();
            writeln!(out, "{} {} (dim {})", if ok { "ok  " } else { "FAIL" }, pattern.join(","), module.dim()).unwrap();
        }
    }
    writeln!(out, "{} of {total} modules satisfy the relations", total - failed).unwrap();
    Ok(if failed == 0 {
        Ok(out)
    } else {
        Err(Failure { stdout: out, message: format!("relation check failed on {failed} modules") })
    })
}

fn compositions(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    (1..=n)
        .flat_map(|first| {
            compositions(n - first).into_iter().map(move |mut rest| {
                rest.insert(0, first);
                rest
            })
        })
        .collect()
}
