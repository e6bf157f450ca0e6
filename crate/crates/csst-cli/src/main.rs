//! `csst`: decide whether two binary codes form a CSS-T pair, explore
//! cyclotomic cosets, run the greedy and propagation searches, regenerate
//! the parameter tables, and compute figures of merit. All outputs are
//! machine-readable JSON (plus aligned text summaries for tables).
//!
//! Exit codes: 0 = pair / success, 1 = not a pair (or trivial C2, or a
//! failed coset criterion), 2 = input or capacity error.

mod matrix_file;
mod report;
mod tables;

use anyhow::{anyhow, Context};
use clap::{Parser, Subcommand};
use csst::code::{BinaryCode, MinWeightOptions, DEFAULT_BUDGET, DEFAULT_SEED};
use csst::cyclic::{
    csst_cyclic_check, cyc_maximality, cyclic_code, extended_cyclic_code, greedy_search,
    minimal_cosets, CosetSet,
};
use csst::field::{order_of_two, ExtField};
use csst::gf2::BinaryVector;
use csst::pair::{
    is_maximal, is_maximal_in_c1, is_maximal_in_c2, quantum_params, scaling_exponent, verify_csst,
};
use report::{
    gamma_of, generator_strings, triorthogonal_flag, CssTSection, MaximalitySection,
    ParamsSection, ReportDocument, TOOL_VERSION,
};
use serde_json::json;
use sha2::{Digest, Sha256};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

#[derive(Parser)]
#[command(name = "csst", version, about = "CSS-T pair toolkit for binary codes")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Verify a pair of generator-matrix files
    Verify {
        /// generator matrix file for C1
        #[arg(long)]
        c1: PathBuf,
        /// generator matrix file for C2
        #[arg(long)]
        c2: PathBuf,
        /// evaluate conditions (2) and (4) independently and require agreement
        #[arg(long)]
        cross_check: bool,
        /// compute maximality in each slot and overall
        #[arg(long)]
        maximality: bool,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u64,
    },
    /// List the minimal cyclotomic cosets mod n
    Cosets {
        #[arg(long)]
        n: u32,
    },
    /// Coset-level pair check for unions of minimal cosets mod 2^s - 1
    CyclicPair {
        #[arg(long)]
        s: u32,
        #[arg(long)]
        extended: bool,
        /// comma-separated coset leaders for I1
        #[arg(long)]
        i1: String,
        /// comma-separated coset leaders for I2
        #[arg(long)]
        i2: String,
        /// adjoin the orbit {n} to I1
        #[arg(long)]
        with_n: bool,
        /// adjoin the symbol 0 to I1 (extended only)
        #[arg(long = "with-0")]
        with_zero: bool,
    },
    /// Greedy coset construction at n = 2^s - 1
    Greedy {
        #[arg(long)]
        s: u32,
        #[arg(long)]
        t: usize,
        #[arg(long)]
        extended: bool,
        /// build the codes, re-verify, and search for a sharp distance witness
        #[arg(long)]
        construct: bool,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        sharpness_budget: u64,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
    },
    /// Regenerate the cyclic/extended rows of a parameter table
    Tables {
        /// 1 = greedy rows, 2 = propagated (maximal-in-C1) rows
        #[arg(long)]
        which: u8,
        /// inclusive range of extension degrees, e.g. 7..10
        #[arg(long)]
        s_range: String,
        #[arg(long)]
        out: PathBuf,
    },
    /// Distillation scaling exponent log2(n/k)/log2(d)
    Gamma {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        d: usize,
    },
    /// The [[n, n/2-1, 2]] pair built from disjoint coordinate pairs
    PairfamilyDmin2 {
        #[arg(long)]
        n: usize,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> anyhow::Result<ExitCode> {
    match cli.command {
        Command::Verify {
            c1,
            c2,
            cross_check,
            maximality,
            seed,
            budget,
        } => cmd_verify(&c1, &c2, cross_check, maximality, seed, budget),
        Command::Cosets { n } => cmd_cosets(n),
        Command::CyclicPair {
            s,
            extended,
            i1,
            i2,
            with_n,
            with_zero,
        } => cmd_cyclic_pair(s, extended, &i1, &i2, with_n, with_zero),
        Command::Greedy {
            s,
            t,
            extended,
            construct,
            sharpness_budget,
            seed,
        } => cmd_greedy(s, t, extended, construct, sharpness_budget, seed),
        Command::Tables { which, s_range, out } => cmd_tables(which, &s_range, &out),
        Command::Gamma { n, k, d } => {
            let g = scaling_exponent(n, k, d)?;
            println!("{g:.3}");
            Ok(ExitCode::SUCCESS)
        }
        Command::PairfamilyDmin2 { n } => cmd_pairfamily(n),
    }
}

struct LoadedCode {
    code: BinaryCode,
    sha256: String,
}

fn load_code(path: &Path) -> anyhow::Result<LoadedCode> {
    let content = std::fs::read_to_string(path)
        .with_context(|| format!("reading {}", path.display()))?;
    let matrix = matrix_file::parse_matrix(&content)
        .map_err(|e| anyhow!("{}:{e}", path.display()))?;
    let sha256 = hex::encode(Sha256::digest(content.as_bytes()));
    Ok(LoadedCode {
        code: BinaryCode::from_matrix(&matrix),
        sha256,
    })
}

fn cmd_verify(
    c1_path: &Path,
    c2_path: &Path,
    cross_check: bool,
    maximality: bool,
    seed: u64,
    budget: u64,
) -> anyhow::Result<ExitCode> {
    let c1 = load_code(c1_path)?;
    let c2 = load_code(c2_path)?;
    if c1.code.len() != c2.code.len() {
        return Err(anyhow!(
            "length mismatch: {} has n={}, {} has n={}",
            c1_path.display(),
            c1.code.len(),
            c2_path.display(),
            c2.code.len()
        ));
    }
    let report = verify_csst(&c1.code, &c2.code, cross_check)?;
    let opts = MinWeightOptions::default()
        .with_seed(seed)
        .with_budget(budget);

    let (params, maximality_section) = if report.is_pair() {
        let p = quantum_params(&c1.code, &c2.code, None, &opts)?;
        let m = if maximality {
            Some(MaximalitySection {
                in_c1: is_maximal_in_c1(&c1.code, &c2.code)?,
                in_c2: is_maximal_in_c2(&c1.code, &c2.code)?,
                full: is_maximal(&c1.code, &c2.code)?,
            })
        } else {
            None
        };
        (Some(p), m)
    } else {
        (None, None)
    };

    let document = ReportDocument {
        inputs: json!({
            "c1": {"path": c1_path.display().to_string(), "sha256": c1.sha256,
                    "n": c1.code.len(), "k": c1.code.dim()},
            "c2": {"path": c2_path.display().to_string(), "sha256": c2.sha256,
                    "n": c2.code.len(), "k": c2.code.dim()},
        }),
        css_t: Some(CssTSection::from_report(&report)),
        params: params.as_ref().map(ParamsSection::from_params),
        maximality: maximality_section,
        triorthogonal_c2: if report.is_pair() {
            triorthogonal_flag(&c2.code)
        } else {
            None
        },
        gamma: params.as_ref().and_then(gamma_of),
        seed,
        budget,
        tool_version: TOOL_VERSION,
    };
    println!("{}", serde_json::to_string_pretty(&document)?);
    Ok(if report.is_pair() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

fn cmd_cosets(n: u32) -> anyhow::Result<ExitCode> {
    let s = order_of_two(n)?;
    if s > 16 {
        return Err(anyhow!("2 has order {s} mod {n}; degrees above 16 are unsupported"));
    }
    let cosets = minimal_cosets(n)?;
    let listing: Vec<_> = cosets
        .iter()
        .map(|c| {
            json!({
                "leader": c.leader(),
                "size": c.len(),
                "elements": c.to_vec(),
            })
        })
        .collect();
    let doc = json!({
        "n": n,
        "s": s,
        "cosets": listing,
        "tool_version": TOOL_VERSION,
    });
    println!("{}", serde_json::to_string_pretty(&doc)?);
    Ok(ExitCode::SUCCESS)
}

fn parse_leaders(arg: &str) -> anyhow::Result<Vec<u32>> {
    arg.split(',')
        .map(|tok| {
            tok.trim()
                .parse::<u32>()
                .with_context(|| format!("invalid coset leader {tok:?}"))
        })
        .collect()
}

fn cmd_cyclic_pair(
    s: u32,
    extended: bool,
    i1_arg: &str,
    i2_arg: &str,
    with_n: bool,
    with_zero: bool,
) -> anyhow::Result<ExitCode> {
    if !(2..=12).contains(&s) {
        return Err(anyhow!("cyclic-pair supports 2 <= s <= 12, got {s}"));
    }
    let n = (1u32 << s) - 1;
    let mut i1 = CosetSet::from_leaders(n, &parse_leaders(i1_arg)?, extended)?;
    let i2 = CosetSet::from_leaders(n, &parse_leaders(i2_arg)?, extended)?;
    if with_n {
        i1 = i1.with_n();
    }
    if with_zero {
        i1 = i1.with_zero().context("--with-0 needs --extended")?;
    }

    let check = csst_cyclic_check(&i1, &i2)?;
    let field = ExtField::new(s)?;
    let (c1, c2) = if extended {
        (
            extended_cyclic_code(&field, &i1)?,
            extended_cyclic_code(&field, &i2)?,
        )
    } else {
        (cyclic_code(&field, &i1)?, cyclic_code(&field, &i2)?)
    };

    // the coset criterion and the matrix-level decision must agree
    let matrix_report = verify_csst(&c1, &c2, c1.len() <= 63 && c2.dim() <= 16)?;
    if matrix_report.is_pair() != check.ok {
        return Err(anyhow!(
            "internal disagreement between coset and matrix criteria"
        ));
    }

    let opts = MinWeightOptions::default();
    let params = if check.ok {
        Some(quantum_params(&c1, &c2, check.d_lower, &opts)?)
    } else {
        None
    };
    let maximality = if check.ok && !extended {
        let flags = cyc_maximality(&i1, &i2)?;
        Some(MaximalitySection {
            in_c1: flags.in_c1,
            in_c2: flags.in_c2,
            full: flags.full,
        })
    } else {
        None
    };

    let i1_i1 = i1.minkowski_sum(&i1)?;
    let triple = i1_i1.minkowski_sum(&i2)?;
    let document = ReportDocument {
        inputs: json!({
            "s": s,
            "n": n,
            "extended": extended,
            "i1": i1.to_vec(),
            "i2": i2.to_vec(),
            "sums": {
                "i1_plus_i1": i1_i1.to_vec(),
                "i1_plus_i2": i1.minkowski_sum(&i2)?.to_vec(),
                "i1_plus_i1_plus_i2": triple.to_vec(),
            },
            "criterion": {
                "subset": check.subset,
                "triple_sum_free": check.triple_sum_free,
                "ok": check.ok,
            },
            "codes": {
                "c1": {"n": c1.len(), "k": c1.dim()},
                "c2": {"n": c2.len(), "k": c2.dim()},
            },
        }),
        css_t: Some(CssTSection::from_report(&matrix_report)),
        params: params.as_ref().map(ParamsSection::from_params),
        maximality,
        triorthogonal_c2: if check.ok { triorthogonal_flag(&c2) } else { None },
        gamma: params.as_ref().and_then(gamma_of),
        seed: opts.seed,
        budget: opts.budget,
        tool_version: TOOL_VERSION,
    };
    println!("{}", serde_json::to_string_pretty(&document)?);
    Ok(if check.ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

fn cmd_greedy(
    s: u32,
    t: usize,
    extended: bool,
    construct: bool,
    sharpness_budget: u64,
    seed: u64,
) -> anyhow::Result<ExitCode> {
    if !(4..=10).contains(&s) {
        return Err(anyhow!("greedy supports 4 <= s <= 10, got {s}"));
    }
    let out = greedy_search(s, t, extended)?;
    let opts = MinWeightOptions::default()
        .with_seed(seed)
        .with_budget(sharpness_budget);

    let inputs = json!({
        "s": s,
        "t": t,
        "extended": extended,
        "n": out.n,
        "length": out.length,
        "i1": out.i1.to_vec(),
        "i2": out.i2.to_vec(),
        "k": out.k,
        "d_lower": out.d_lower,
    });

    let document = if construct {
        let field = ExtField::new(s)?;
        let (c1, c2) = if extended {
            (
                extended_cyclic_code(&field, &out.i1)?,
                extended_cyclic_code(&field, &out.i2)?,
            )
        } else {
            (cyclic_code(&field, &out.i1)?, cyclic_code(&field, &out.i2)?)
        };
        let report = verify_csst(&c1, &c2, c1.len() <= 63 && c2.dim() <= 16)?;
        anyhow::ensure!(report.is_pair(), "constructed greedy pair failed verification");
        let params = quantum_params(&c1, &c2, Some(out.d_lower), &opts)?;
        ReportDocument {
            inputs,
            css_t: Some(CssTSection::from_report(&report)),
            params: Some(ParamsSection::from_params(&params)),
            maximality: None,
            triorthogonal_c2: triorthogonal_flag(&c2),
            gamma: gamma_of(&params),
            seed,
            budget: sharpness_budget,
            tool_version: TOOL_VERSION,
        }
    } else {
        ReportDocument {
            inputs,
            css_t: None,
            params: Some(ParamsSection {
                n: out.length,
                k: out.k,
                d_lower: out.d_lower,
                d_upper: None,
                d_exact: false,
                witness_weight: None,
            }),
            maximality: None,
            triorthogonal_c2: None,
            gamma: None,
            seed,
            budget: sharpness_budget,
            tool_version: TOOL_VERSION,
        }
    };
    println!("{}", serde_json::to_string_pretty(&document)?);
    Ok(ExitCode::SUCCESS)
}

fn cmd_tables(which: u8, s_range: &str, out: &Path) -> anyhow::Result<ExitCode> {
    if which != 1 && which != 2 {
        return Err(anyhow!("--which must be 1 or 2"));
    }
    let (a, b) = s_range
        .split_once("..")
        .ok_or_else(|| anyhow!("--s-range takes the form A..B (inclusive)"))?;
    let a: u32 = a.trim().parse().context("bad range start")?;
    let b: u32 = b.trim().parse().context("bad range end")?;
    if !(4..=10).contains(&a) || !(4..=10).contains(&b) || a > b {
        return Err(anyhow!("tables support 4 <= A <= B <= 10"));
    }
    if let Ok(threads) = std::env::var("CSST_THREADS") {
        let threads: usize = threads.parse().context("CSST_THREADS must be an integer")?;
        rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build_global()
            .ok();
    }
    tables::run_tables(which, (a, b), out, &MinWeightOptions::default())?;
    Ok(ExitCode::SUCCESS)
}

fn cmd_pairfamily(n: usize) -> anyhow::Result<ExitCode> {
    if n < 4 || !n.is_multiple_of(2) {
        return Err(anyhow!("the family needs even n >= 4, got {n}"));
    }
    let rows: Vec<BinaryVector> = (0..n / 2)
        .map(|i| BinaryVector::from_support(n, &[2 * i, 2 * i + 1]))
        .collect();
    let c1 = BinaryCode::from_rows(n, rows)?;
    let c2 = BinaryCode::repetition(n);
    let report = verify_csst(&c1, &c2, n <= 32)?;
    anyhow::ensure!(report.is_pair(), "family pair failed verification");
    let opts = MinWeightOptions::default();
    // dual(C2) is the even-weight code, so 2 is a certified lower bound
    let params = quantum_params(&c1, &c2, Some(2), &opts)?;
    let document = ReportDocument {
        inputs: json!({
            "n": n,
            "c1_generator": generator_strings(&c1),
            "c2_generator": generator_strings(&c2),
        }),
        css_t: Some(CssTSection::from_report(&report)),
        params: Some(ParamsSection::from_params(&params)),
        maximality: None,
        triorthogonal_c2: triorthogonal_flag(&c2),
        gamma: gamma_of(&params),
        seed: opts.seed,
        budget: opts.budget,
        tool_version: TOOL_VERSION,
    };
    println!("{}", serde_json::to_string_pretty(&document)?);
    Ok(ExitCode::SUCCESS)
}
