//! Command line interface for the exact diagram-category engine.
//!
//! Exit codes: 0 all requested checks pass, 1 a check failed, 2 usage
//! or domain error, 3 resource guard exceeded.

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use num_rational::BigRational;

use diagcat_core::branching::{
    brauer_branching_check, brauer_dimension_check, partition_dimension_check,
};
use diagcat_core::csp::{build_instance, CspFamily};
use diagcat_core::diagalg::brauer::{e_average, e_from_word, reduced_words_longest};
use diagcat_core::diagalg::partition::partition_idempotent_recursion;
use diagcat_core::diagrams::{
    enumerate_directed, enumerate_matchings, enumerate_noncrossing,
    enumerate_partition_diagrams, enumerate_regular_diagrams, enumerate_setpartitions,
};
use diagcat_core::error::Error;
use diagcat_core::evaluation::{
    gl_permutation_checks, gl_walled_injectivity, relation_test_suite, sn_fundamental_checks,
    sp_fundamental_checks, Evaluator, Report,
};
use diagcat_core::qpoly::QPoly;
use diagcat_core::symfunc::{invariant_character, s_to_p, CharacterFamily, MultisetMode};
use diagcat_core::tableaux::{
    enumerate_oscillating, enumerate_partitions, fake_degree_schur, standard_tableaux, Partition,
};

#[derive(Parser)]
#[command(name = "diagcat", version, about = "Exact diagram-category engine")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, ValueEnum)]
enum Format {
    Json,
    Csv,
    Pretty,
}

#[derive(Args, Clone)]
struct Common {
    /// output format
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// run the module invariant suite instead of the main computation
    #[arg(long, default_value_t = false)]
    selftest: bool,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, ValueEnum)]
enum EnumerateKind {
    Partitions,
    Matchings,
    Noncrossing,
    Setpartitions,
    PartitionDiagrams,
    Regular,
    Directed,
    Tableaux,
    Oscillating,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, ValueEnum)]
enum FamilyArg {
    NoncrossingMatchings,
    AllMatchings,
    RegularGraphs,
    SetPartitions,
    MultisetPartitions,
    Permutations,
    TemperleyLieb,
    SpMatchings,
    SpSympower,
    SpFundamental,
    SymSets,
    SymMultiset,
    GlAdjoint,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, ValueEnum)]
enum GroupArg {
    Sp,
    Sn,
    Gl,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, ValueEnum)]
enum TowerArg {
    Brauer,
    Partition,
}

#[derive(Subcommand)]
enum Command {
    /// List or count combinatorial families
    Enumerate {
        #[arg(long, value_enum)]
        kind: EnumerateKind,
        #[arg(long)]
        r: Option<usize>,
        #[arg(long)]
        s: Option<usize>,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        k: Option<usize>,
        /// partition shape such as 2,2,1
        #[arg(long)]
        shape: Option<String>,
        #[arg(long, default_value_t = false)]
        count_only: bool,
        #[command(flatten)]
        common: Common,
    },
    /// Invariant characters in the power-sum basis
    Character {
        #[arg(long, value_enum)]
        family: FamilyArg,
        #[arg(long)]
        r: usize,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        k: Option<usize>,
        /// h for symmetric powers, e for exterior powers
        #[arg(long, default_value = "h")]
        mode: String,
        /// truncate the output above this degree
        #[arg(long)]
        max_degree: Option<usize>,
        #[command(flatten)]
        common: Common,
    },
    /// Fake degree polynomials
    Fakedegree {
        /// a Schur shape such as 2,2
        #[arg(long)]
        schur: Option<String>,
        #[arg(long, value_enum)]
        family: Option<FamilyArg>,
        #[arg(long)]
        r: Option<usize>,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        k: Option<usize>,
        #[arg(long, default_value = "h")]
        mode: String,
        #[command(flatten)]
        common: Common,
    },
    /// Verify a cyclic sieving instance
    CspVerify {
        #[arg(long, value_enum)]
        family: FamilyArg,
        #[arg(long)]
        r: Option<usize>,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        k: Option<usize>,
        #[command(flatten)]
        common: Common,
    },
    /// Fundamental theorem checks by exact rank
    FftSft {
        #[arg(long, value_enum)]
        group: GroupArg,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        r: usize,
        #[command(flatten)]
        common: Common,
    },
    /// Idempotent constructions and their defining properties
    Idempotent {
        #[arg(long, value_enum)]
        tower: TowerArg,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        r: Option<usize>,
        /// loop parameter as num or num/den
        #[arg(long, allow_hyphen_values = true)]
        delta: Option<String>,
        #[command(flatten)]
        common: Common,
    },
    /// Branching-rule dimension checks for the towers
    Branching {
        #[arg(long, value_enum)]
        tower: TowerArg,
        #[arg(long)]
        r: usize,
        /// propagating number; must match the shape size when both given
        #[arg(long)]
        p: Option<usize>,
        /// shape such as 2,1 for a single branching identity
        #[arg(long)]
        shape: Option<String>,
        #[command(flatten)]
        common: Common,
    },
    /// Defining relations of an evaluation functor
    Relations {
        #[arg(long, value_enum)]
        group: GroupArg,
        #[arg(long)]
        n: usize,
        #[command(flatten)]
        common: Common,
    },
}

fn parse_shape(text: &str) -> Result<Partition, Error> {
    if text.trim().is_empty() {
        return Ok(Partition::empty());
    }
    let parts: Result<Vec<usize>, _> = text.split(',').map(|t| t.trim().parse()).collect();
    let parts = parts.map_err(|_| Error::Domain(format!("cannot parse shape {text}")))?;
    Partition::new(parts)
}

fn parse_delta(text: &str) -> Result<BigRational, Error> {
    let parse_int = |t: &str| {
        t.trim()
            .parse::<BigInt>()
            .map_err(|_| Error::Domain(format!("cannot parse rational {text}")))
    };
    match text.split_once('/') {
        Some((num, den)) => Ok(BigRational::new(parse_int(num)?, parse_int(den)?)),
        None => Ok(BigRational::from_integer(parse_int(text)?)),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(all_pass) => {
            if all_pass {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(Error::Resource(msg)) => {
            eprintln!("resource guard: {msg}");
            ExitCode::from(3)
        }
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(2)
        }
    }
}

fn emit_report(report: &Report, format: Format) -> bool {
    match format {
        Format::Json => println!("{}", serde_json::to_string_pretty(&report.to_json()).unwrap()),
        Format::Csv => {
            println!("check,pass,details");
            for l in &report.lines {
                println!("{},{},{}", l.name, l.pass, l.details.replace(',', ";"));
            }
        }
        Format::Pretty => {
            for l in &report.lines {
                println!("[{}] {} {}", if l.pass { "pass" } else { "FAIL" }, l.name, l.details);
            }
        }
    }
    report.all_pass()
}

fn emit_value(value: serde_json::Value, format: Format) {
    match format {
        Format::Json => println!("{}", serde_json::to_string_pretty(&value).unwrap()),
        Format::Csv | Format::Pretty => match &value {
            serde_json::Value::Array(items) => {
                for item in items {
                    println!("{item}");
                }
            }
            other => println!("{other}"),
        },
    }
}

fn need(value: Option<usize>, name: &str) -> Result<usize, Error> {
    value.ok_or_else(|| Error::Domain(format!("missing required parameter --{name}")))
}

fn run(cli: Cli) -> Result<bool, Error> {
    match cli.command {
        Command::Enumerate {
            kind,
            r,
            s,
            n,
            k,
            shape,
            count_only,
            common,
        } => {
            if common.selftest {
                return selftest_enumerate(common.format);
            }
            let items: Vec<serde_json::Value> = match kind {
                EnumerateKind::Partitions => enumerate_partitions(need(r, "r")?, n, false)
                    .into_iter()
                    .map(|p| p.to_json())
                    .collect(),
                EnumerateKind::Matchings => enumerate_matchings(need(r, "r")?)?
                    .into_iter()
                    .map(|d| d.to_json())
                    .collect(),
                EnumerateKind::Noncrossing => enumerate_noncrossing(need(r, "r")?, need(n, "n")?)?
                    .into_iter()
                    .map(|d| d.to_json())
                    .collect(),
                EnumerateKind::Setpartitions => enumerate_setpartitions(need(r, "r")?, n)?
                    .into_iter()
                    .map(|blocks| serde_json::json!(blocks))
                    .collect(),
                EnumerateKind::PartitionDiagrams => {
                    enumerate_partition_diagrams(need(r, "r")?, need(s, "s")?)?
                        .into_iter()
                        .map(|d| d.to_json())
                        .collect()
                }
                EnumerateKind::Regular => {
                    enumerate_regular_diagrams(need(r, "r")?, need(n, "n")?, need(k, "k")?)?
                        .into_iter()
                        .map(|d| d.to_json())
                        .collect()
                }
                EnumerateKind::Directed => enumerate_directed(need(r, "r")?, need(s, "s")?)?
                    .into_iter()
                    .map(|d| d.to_json())
                    .collect(),
                EnumerateKind::Tableaux => {
                    let shape = parse_shape(shape.as_deref().unwrap_or_default())?;
                    standard_tableaux(&shape)
                        .into_iter()
                        .map(|t| t.to_json())
                        .collect()
                }
                EnumerateKind::Oscillating => {
                    let fin = parse_shape(shape.as_deref().unwrap_or_default())?;
                    enumerate_oscillating(need(n, "n")?, need(r, "r")?, &fin)
                        .into_iter()
                        .map(|t| t.to_json())
                        .collect()
                }
            };
            if count_only {
                emit_value(serde_json::json!(items.len()), common.format);
            } else {
                emit_value(serde_json::Value::Array(items), common.format);
            }
            Ok(true)
        }
        Command::Character {
            family,
            r,
            n,
            k,
            mode,
            max_degree,
            common,
        } => {
            if common.selftest {
                return selftest_character(common.format);
            }
            let family = character_family(family, r, n, k, &mode)?;
            let mut ch = invariant_character(&family)?;
            if let Some(cap) = max_degree {
                ch = ch.with_cap(&[Some(cap)]);
            }
            emit_value(ch.to_json(), common.format);
            Ok(true)
        }
        Command::Fakedegree {
            schur,
            family,
            r,
            n,
            k,
            mode,
            common,
        } => {
            if common.selftest {
                return selftest_character(common.format);
            }
            let poly: QPoly = match (schur, family) {
                (Some(text), None) => fake_degree_schur(&parse_shape(&text)?)?,
                (None, Some(fam)) => {
                    let family = character_family(fam, need(r, "r")?, n, k, &mode)?;
                    invariant_character(&family)?.fake_degree()?
                }
                _ => {
                    return Err(Error::Domain(
                        "provide exactly one of --schur or --family".into(),
                    ))
                }
            };
            emit_value(poly.to_json(), common.format);
            Ok(true)
        }
        Command::CspVerify {
            family,
            r,
            n,
            k,
            common,
        } => {
            if common.selftest {
                return selftest_csp(common.format);
            }
            let family = csp_family(family, r, n, k)?;
            let report = build_instance(&family)?;
            emit_value(report.to_json(), common.format);
            Ok(report.pass)
        }
        Command::FftSft { group, n, r, common } => {
            if common.selftest {
                return selftest_relations(common.format);
            }
            let report = match group {
                GroupArg::Sp => sp_fundamental_checks(&Evaluator::symplectic(n), r)?,
                GroupArg::Sn => sn_fundamental_checks(&Evaluator::symmetric_group(n), r)?,
                GroupArg::Gl => {
                    let e = Evaluator::general_linear(n);
                    let mut report = gl_permutation_checks(&e, r)?;
                    if 2 * n >= 2 * r {
                        let walled = gl_walled_injectivity(&e, r, 0, r, 0)?;
                        report.lines.extend(walled.lines);
                    }
                    report
                }
            };
            Ok(emit_report(&report, common.format))
        }
        Command::Idempotent {
            tower,
            n,
            r,
            delta,
            common,
        } => {
            if common.selftest {
                return selftest_idempotent(common.format);
            }
            let mut report = Report::default();
            match tower {
                TowerArg::Brauer => {
                    let n = need(n, "n")?;
                    let delta = match delta {
                        Some(text) => parse_delta(&text)?,
                        None => BigRational::from_integer(BigInt::from(-2 * n as i64)),
                    };
                    let avg = e_average(n + 1, &delta)?;
                    report.push(
                        format!("E({}) idempotent at delta={delta}", n + 1),
                        avg.multiply(&avg)? == avg,
                        String::new(),
                    );
                    for word in reduced_words_longest(n + 1) {
                        let e = e_from_word(n, &word, &delta)?;
                        report.push(
                            format!("word {word:?} reproduces the average"),
                            e == avg,
                            String::new(),
                        );
                    }
                    report.push(
                        format!("trace E({}) vanishes", n + 1),
                        avg.trace()? == BigRational::from_integer(BigInt::from(0)),
                        String::new(),
                    );
                }
                TowerArg::Partition => {
                    let r = need(r, "r")?;
                    let delta = match delta {
                        Some(text) => parse_delta(&text)?,
                        None => BigRational::from_integer(BigInt::from(7)),
                    };
                    let tower = partition_idempotent_recursion(r, &delta)?;
                    for (idx, e) in tower.e.iter().enumerate() {
                        report.push(
                            format!("E({}) idempotent at delta={delta} (conjecture)", idx + 1),
                            e.multiply(e)? == *e,
                            String::new(),
                        );
                    }
                    for (idx, e) in tower.e_prime.iter().enumerate() {
                        report.push(
                            format!("E'({}) idempotent at delta={delta} (conjecture)", idx + 1),
                            e.multiply(e)? == *e,
                            String::new(),
                        );
                    }
                }
            }
            Ok(emit_report(&report, common.format))
        }
        Command::Branching {
            tower,
            r,
            p,
            shape,
            common,
        } => {
            if common.selftest {
                return selftest_branching(common.format);
            }
            if let (Some(p), Some(text)) = (p, shape.as_deref()) {
                let lam = parse_shape(text)?;
                if lam.size() != p {
                    return Err(Error::Domain(format!(
                        "--p {p} disagrees with the shape size {}",
                        lam.size()
                    )));
                }
            }
            let report = match tower {
                TowerArg::Brauer => match shape {
                    Some(text) => brauer_branching_check(r, &parse_shape(&text)?)?,
                    None => {
                        let mut report = brauer_dimension_check(r)?;
                        let extra = brauer_branching_check(r, &Partition::empty())?;
                        report.lines.extend(extra.lines);
                        report
                    }
                },
                TowerArg::Partition => partition_dimension_check(r)?,
            };
            Ok(emit_report(&report, common.format))
        }
        Command::Relations { group, n, common } => {
            if common.selftest {
                return selftest_relations(common.format);
            }
            let evaluator = match group {
                GroupArg::Sp => Evaluator::symplectic(n),
                GroupArg::Sn => Evaluator::symmetric_group(n),
                GroupArg::Gl => Evaluator::general_linear(n),
            };
            let report = relation_test_suite(&evaluator)?;
            Ok(emit_report(&report, common.format))
        }
    }
}

fn character_family(
    family: FamilyArg,
    r: usize,
    n: Option<usize>,
    k: Option<usize>,
    mode: &str,
) -> Result<CharacterFamily, Error> {
    let mode = match mode {
        "h" => MultisetMode::H,
        "e" => MultisetMode::E,
        other => return Err(Error::Domain(format!("unknown mode {other}"))),
    };
    Ok(match family {
        FamilyArg::SpMatchings | FamilyArg::NoncrossingMatchings => CharacterFamily::SpMatchings {
            r,
            n: need(n, "n")?,
        },
        FamilyArg::SpSympower | FamilyArg::RegularGraphs => CharacterFamily::SpSymPower {
            r,
            n: need(n, "n")?,
            k: need(k, "k")?,
        },
        FamilyArg::SpFundamental => CharacterFamily::SpFundamental {
            r,
            n: need(n, "n")?,
            k: need(k, "k")?,
        },
        FamilyArg::SymSets | FamilyArg::SetPartitions => CharacterFamily::SymSets {
            r,
            n: need(n, "n")?,
        },
        FamilyArg::SymMultiset | FamilyArg::MultisetPartitions => CharacterFamily::SymMultiset {
            r,
            n: need(n, "n")?,
            k: need(k, "k")?,
            mode,
        },
        FamilyArg::GlAdjoint => CharacterFamily::GlAdjoint {
            r,
            n: need(n, "n")?,
        },
        FamilyArg::Permutations => CharacterFamily::Permutations { r },
        FamilyArg::AllMatchings | FamilyArg::TemperleyLieb => {
            return Err(Error::Domain(
                "this family is a CSP instance; use csp-verify".into(),
            ))
        }
    })
}

fn csp_family(
    family: FamilyArg,
    r: Option<usize>,
    n: Option<usize>,
    k: Option<usize>,
) -> Result<CspFamily, Error> {
    Ok(match family {
        FamilyArg::NoncrossingMatchings => CspFamily::NoncrossingMatchings {
            r: need(r, "r")?,
            n: need(n, "n")?,
        },
        FamilyArg::AllMatchings => CspFamily::AllMatchings { r: need(r, "r")? },
        FamilyArg::RegularGraphs => CspFamily::RegularGraphs {
            r: need(r, "r")?,
            n: need(n, "n")?,
            k: need(k, "k")?,
        },
        FamilyArg::SetPartitions => CspFamily::SetPartitions {
            r: need(r, "r")?,
            n: need(n, "n")?,
        },
        FamilyArg::MultisetPartitions => CspFamily::MultisetPartitions {
            r: need(r, "r")?,
            n: need(n, "n")?,
            k: need(k, "k")?,
        },
        FamilyArg::Permutations => CspFamily::Permutations { r: need(r, "r")? },
        FamilyArg::TemperleyLieb => CspFamily::TemperleyLieb { k: need(k, "k")? },
        other => {
            return Err(Error::Domain(format!(
                "{other:?} is a character family; use character or fakedegree"
            )))
        }
    })
}

fn selftest_enumerate(format: Format) -> Result<bool, Error> {
    let mut report = Report::default();
    report.push_eq("matchings of [6]", &enumerate_matchings(6)?.len(), &15);
    report.push_eq("noncrossing of [6]", &enumerate_noncrossing(6, 1)?.len(), &5);
    report.push_eq("X(4,2,2)", &enumerate_regular_diagrams(4, 2, 2)?.len(), &6);
    report.push_eq(
        "partitions of [4] into <= 2 blocks",
        &enumerate_setpartitions(4, Some(2))?.len(),
        &8,
    );
    Ok(emit_report(&report, format))
}

fn selftest_character(format: Format) -> Result<bool, Error> {
    let mut report = Report::default();
    let perm3 = invariant_character(&CharacterFamily::Permutations { r: 3 })?;
    report.push_eq(
        "fd of the permutation character at r=3",
        &perm3.fake_degree()?,
        &QPoly::from_i64(&[3, 1, 1, 1]),
    );
    let s22 = s_to_p("X", &parse_shape("2,2")?);
    report.push_eq(
        "fd(s_(2,2))",
        &s22.fake_degree()?,
        &QPoly::from_i64(&[0, 0, 1, 0, 1]),
    );
    Ok(emit_report(&report, format))
}

fn selftest_csp(format: Format) -> Result<bool, Error> {
    let mut report = Report::default();
    for family in [
        CspFamily::NoncrossingMatchings { r: 3, n: 1 },
        CspFamily::Permutations { r: 4 },
        CspFamily::SetPartitions { r: 4, n: 2 },
        CspFamily::TemperleyLieb { k: 3 },
    ] {
        let instance = build_instance(&family)?;
        report.push(instance.label.clone(), instance.pass, String::new());
    }
    Ok(emit_report(&report, format))
}

fn selftest_relations(format: Format) -> Result<bool, Error> {
    let mut report = Report::default();
    for n in 1..=2 {
        let sub = relation_test_suite(&Evaluator::symplectic(n))?;
        report.push(format!("sp(2*{n}) relations"), sub.all_pass(), String::new());
    }
    for n in 1..=2 {
        let sub = relation_test_suite(&Evaluator::symmetric_group(n))?;
        report.push(format!("s_{n} relations"), sub.all_pass(), String::new());
        let sub = relation_test_suite(&Evaluator::general_linear(n))?;
        report.push(format!("gl({n}) relations"), sub.all_pass(), String::new());
    }
    Ok(emit_report(&report, format))
}

fn selftest_idempotent(format: Format) -> Result<bool, Error> {
    let mut report = Report::default();
    let delta = BigRational::from_integer(BigInt::from(-2));
    let e2 = e_average(2, &delta)?;
    report.push("E(2) idempotent", e2.multiply(&e2)? == e2, String::new());
    let tower = partition_idempotent_recursion(2, &BigRational::from_integer(BigInt::from(7)))?;
    report.push(
        "partition E(2) idempotent at delta=7",
        tower.e[1].multiply(&tower.e[1])? == tower.e[1],
        String::new(),
    );
    Ok(emit_report(&report, format))
}

fn selftest_branching(format: Format) -> Result<bool, Error> {
    let mut report = brauer_dimension_check(4)?;
    let extra = partition_dimension_check(2)?;
    report.lines.extend(extra.lines);
    Ok(emit_report(&report, format))
}
