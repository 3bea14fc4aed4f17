use std::fmt::Write as _;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde_json::{json, Value};

use shuffle_skew::involution::{allowable_contents, fixed_point, involution_table, word_string};
use shuffle_skew::macdonald::delta_prime_e;
use shuffle_skew::parking::{c_stat, enumerate_splits, pair_big_with_rectangle, rational_shuffle_sum};
use shuffle_skew::paths::enumerate_paths;
use shuffle_skew::stacks::stacked_sum;
use shuffle_skew::symfunc::{e_n, skew_schur};
use shuffle_skew::{BigSmallSplit, DyckPath, Error, Partition, QTPoly, SymFunc};

#[derive(Parser)]
#[command(name = "shuffle-skew", version, about = "Rational shuffle sums, stacked parking functions and Schur skewing")]
struct Cli {
    #[arg(long, value_enum, default_value_t = Format::Pretty, global = true)]
    format: Format,
    /// Largest K = k(n−k+1) allowed for exhaustive commands.
    #[arg(long, default_value_t = 12, global = true)]
    cap: usize,
    /// Worker threads (defaults to all cores).
    #[arg(long, global = true)]
    jobs: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Pretty,
}

#[derive(Subcommand)]
enum Command {
    /// Skewed shuffle sum, stacked sum and Δ′_{e_{k−1}} e_n side by side.
    Expand {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
    },
    /// Check that pairing the big labels with the rectangle gives q^c.
    VerifyPerp(PerpArgs),
    /// Pair the words of allowable content under the sign-reversing involution.
    InvolutionTable {
        #[arg(long)]
        m: usize,
    },
}

#[derive(Args)]
struct PerpArgs {
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    k: Option<usize>,
    #[arg(long = "K")]
    big_k: Option<usize>,
    /// Every path and b-vector for the given size.
    #[arg(long)]
    all: bool,
    /// Vertical runs of a single path, comma separated.
    #[arg(long, value_delimiter = ',')]
    runs: Option<Vec<usize>>,
    /// Big-label counts per column, comma separated.
    #[arg(long, value_delimiter = ',')]
    b: Option<Vec<usize>>,
    /// Test hook: add this offset to the computed c before comparing.
    #[arg(long, hide = true, default_value_t = 0, allow_hyphen_values = true)]
    corrupt_c: i64,
}

enum Failure {
    Usage(String),
    Violation,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(j) = cli.jobs {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(j).build_global() {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    }
    let result = match &cli.command {
        Command::Expand { n, k } => cmd_expand(&cli, *n, *k),
        Command::VerifyPerp(args) => cmd_verify_perp(&cli, args),
        Command::InvolutionTable { m } => cmd_involution_table(&cli, *m),
    };
    match result {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err((out, Failure::Violation)) => {
            print!("{out}");
            ExitCode::from(1)
        }
        Err((_, Failure::Usage(msg))) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

type CmdResult = Result<String, (String, Failure)>;

fn usage<T>(r: Result<T, Error>) -> Result<T, (String, Failure)> {
    r.map_err(|e| (String::new(), e.into()))
}

fn guard(cli: &Cli, big_k: usize) -> Result<(), (String, Failure)> {
    if big_k > cli.cap {
        return Err((String::new(), Failure::Usage(format!("K = {big_k} exceeds the cap {} (raise --cap)", cli.cap))));
    }
    Ok(())
}

fn verdict(ok: bool) -> &'static str {
    if ok {
        "PASS"
    } else {
        "FAIL"
    }
}

/// Schur terms in reverse-lex order of partitions.
fn sorted_terms(f: &SymFunc) -> Vec<(Partition, QTPoly)> {
    let s = f.to_schur();
    let mut terms: Vec<_> = s.terms().map(|(p, c)| (p.clone(), c.clone())).collect();
    terms.sort_by(|a, b| b.0.cmp(&a.0));
    terms
}

fn schur_json(f: &SymFunc) -> Value {
    Value::Array(sorted_terms(f).into_iter().map(|(p, c)| json!({ "partition": p, "coeff": c })).collect())
}

fn cmd_expand(cli: &Cli, n: usize, k: usize) -> CmdResult {
    if k == 0 || k > n {
        return Err((String::new(), Failure::Usage(format!("need 1 <= k <= n, got n={n}, k={k}"))));
    }
    guard(cli, k * (n - k + 1))?;
    let shuffle = usage(rational_shuffle_sum(n, k))?;
    let rect = Partition::rectangle(k - 1, n - k);
    let skewed = skew_schur(&rect, &shuffle);
    let stacked = usage(stacked_sum(n, k))?;
    let algebraic = match delta_prime_e(k - 1, &e_n(n)) {
        Ok(f) => f,
        Err(e @ Error::Internal(_)) => return Err((format!("{}\n", json!({ "error": e.to_string() })), Failure::Violation)),
        Err(e) => return Err((String::new(), e.into())),
    };
    let ok = skewed.same_as(&stacked) && stacked.same_as(&algebraic);
    let named = [("skewed_shuffle", &skewed), ("stacked", &stacked), ("delta_prime", &algebraic)];
    let out = match cli.format {
        Format::Json => {
            let mut obj = serde_json::Map::new();
            obj.insert("n".into(), json!(n));
            obj.insert("k".into(), json!(k));
            obj.insert("shuffle".into(), schur_json(&shuffle));
            for (name, f) in named {
                obj.insert(name.into(), schur_json(f));
            }
            obj.insert("verdict".into(), json!(verdict(ok)));
            format!("{}\n", Value::Object(obj))
        }
        Format::Csv => {
            let mut support: Vec<Partition> = named.iter().flat_map(|(_, f)| sorted_terms(f)).map(|(p, _)| p).collect();
            support.sort_by(|a, b| b.cmp(a));
            support.dedup();
            let mut s = String::from("partition,skewed_shuffle,stacked,delta_prime\n");
            for p in support {
                let cells: Vec<String> = named.iter().map(|(_, f)| f.to_schur().coeff(&p).to_string()).collect();
                writeln!(s, "\"{p}\",{}", cells.join(",")).unwrap();
            }
            writeln!(s, "verdict,{}", verdict(ok)).unwrap();
            s
        }
        Format::Pretty => {
            let mut s = format!("(n, k) = ({n}, {k}), skewing by s_{rect}\n");
            writeln!(s, "{:<16}{}", "shuffle", shuffle.to_schur()).unwrap();
            for (name, f) in named {
                writeln!(s, "{name:<16}{}", f.to_schur()).unwrap();
            }
            writeln!(s, "verdict         {}", verdict(ok)).unwrap();
            s
        }
    };
    if ok {
        Ok(out)
    } else {
        Err((out, Failure::Violation))
    }
}

struct PerpRow {
    split: BigSmallSplit,
    pairing: QTPoly,
    c: i64,
    tdinv_p0: Option<usize>,
    ok: bool,
}

fn check_split(split: BigSmallSplit, corrupt: i64) -> PerpRow {
    let pairing = pair_big_with_rectangle(&split);
    let c = c_stat(&split) + corrupt;
    if !split.is_admissible() {
        let ok = pairing.is_zero();
        return PerpRow { split, pairing, c, tdinv_p0: None, ok };
    }
    let tdinv_p0 = fixed_point(&split).ok().map(|p0| split.big_boxes().tdinv(&p0));
    let ok = c >= 0 && pairing == QTPoly::q_pow(c as u32) && tdinv_p0.is_some_and(|t| t as i64 == c);
    PerpRow { split, pairing, c, tdinv_p0, ok }
}

fn resolve_nk(args: &PerpArgs) -> Result<(usize, usize), Failure> {
    let k = match (&args.runs, args.k) {
        (Some(r), _) => r.len(),
        (None, Some(k)) => k,
        (None, None) => return Err(Failure::Usage("give --k or --runs".into())),
    };
    if k == 0 {
        return Err(Failure::Usage("k must be positive".into()));
    }
    let from_k = |big_k: usize| -> Result<usize, Failure> {
        if !big_k.is_multiple_of(k) || big_k / k == 0 {
            return Err(Failure::Usage(format!("K = {big_k} is not a positive multiple of k = {k}")));
        }
        Ok(big_k / k + k - 1)
    };
    let n = match (args.n, args.big_k, &args.runs) {
        (Some(n), Some(big_k), _) if from_k(big_k)? != n => {
            return Err(Failure::Usage(format!("--n {n} and --K {big_k} disagree")))
        }
        (Some(n), _, _) => n,
        (None, Some(big_k), _) => from_k(big_k)?,
        (None, None, Some(r)) => from_k(r.iter().sum())?,
        (None, None, None) => return Err(Failure::Usage("give --n or --K".into())),
    };
    if k > n {
        return Err(Failure::Usage(format!("need k <= n, got n={n}, k={k}")));
    }
    Ok((n, k))
}

fn cmd_verify_perp(cli: &Cli, args: &PerpArgs) -> CmdResult {
    let (n, k) = resolve_nk(args).map_err(|f| (String::new(), f))?;
    let big_k = k * (n - k + 1);
    let splits: Vec<BigSmallSplit> = match (&args.runs, &args.b, args.all) {
        (Some(runs), Some(b), false) => {
            let path = usage(DyckPath::new(runs.iter().sum(), runs.len(), runs.clone()))?;
            if path.height() != big_k {
                return Err((String::new(), Failure::Usage(format!("runs sum to {}, expected K = {big_k}", path.height()))));
            }
            vec![usage(BigSmallSplit::new(n, path, b.clone()))?]
        }
        (None, None, true) => {
            guard(cli, big_k)?;
            let paths = usage(enumerate_paths(big_k, k))?;
            let mut all = Vec::new();
            for p in &paths {
                all.extend(usage(enumerate_splits(n, p))?);
            }
            all
        }
        _ => {
            return Err((String::new(), Failure::Usage("use either --all or both --runs and --b".into())));
        }
    };
    let rows: Vec<PerpRow> = splits.into_par_iter().map(|s| check_split(s, args.corrupt_c)).collect();
    let ok = rows.iter().all(|r| r.ok);
    let first_bad = rows.iter().find(|r| !r.ok);
    let row_json = |r: &PerpRow| {
        json!({
            "split": r.split.to_json(),
            "admissible": r.split.is_admissible(),
            "pairing": r.pairing,
            "c_stat": r.c,
            "tdinv_fixed_point": r.tdinv_p0,
            "verdict": verdict(r.ok),
        })
    };
    let out = match cli.format {
        Format::Json => {
            let mut obj = json!({
                "n": n,
                "k": k,
                "K": big_k,
                "cases": rows.len(),
                "admissible": rows.iter().filter(|r| r.split.is_admissible()).count(),
                "verdict": verdict(ok),
            });
            if rows.len() == 1 {
                obj["case"] = row_json(&rows[0]);
            }
            if let Some(bad) = first_bad {
                obj["counterexample"] = row_json(bad);
            }
            format!("{obj}\n")
        }
        Format::Csv => {
            let mut s = String::from("runs,b,admissible,pairing,c_stat,tdinv_fixed_point,verdict\n");
            for r in &rows {
                let join = |v: &[usize]| v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ");
                writeln!(
                    s,
                    "{},{},{},{},{},{},{}",
                    join(r.split.path().runs()),
                    join(r.split.b()),
                    r.split.is_admissible(),
                    r.pairing,
                    r.c,
                    r.tdinv_p0.map_or(String::new(), |t| t.to_string()),
                    verdict(r.ok)
                )
                .unwrap();
            }
            s
        }
        Format::Pretty => {
            let admissible = rows.iter().filter(|r| r.split.is_admissible()).count();
            let mut s = format!("(K, k) = ({big_k}, {k}), n = {n}: {} splits, {admissible} admissible\n", rows.len());
            if rows.len() == 1 {
                let r = &rows[0];
                writeln!(s, "runs {:?} b {:?}: pairing {}, c = {}", r.split.path().runs(), r.split.b(), r.pairing, r.c).unwrap();
            }
            if let Some(bad) = first_bad {
                writeln!(s, "counterexample {}", row_json(bad)).unwrap();
            }
            writeln!(s, "verdict {}", verdict(ok)).unwrap();
            s
        }
    };
    if ok {
        Ok(out)
    } else {
        Err((out, Failure::Violation))
    }
}

fn cmd_involution_table(cli: &Cli, m: usize) -> CmdResult {
    let table = usage(involution_table(m))?;
    let contents = usage(allowable_contents(m))?;
    let out = match cli.format {
        Format::Json => {
            let obj = json!({
                "m": m,
                "contents": contents,
                "pairs": table.pairs.iter().map(|(a, b)| json!([word_string(a), word_string(b)])).collect::<Vec<_>>(),
                "fixed": table.fixed.iter().map(|w| word_string(w)).collect::<Vec<_>>(),
            });
            format!("{obj}\n")
        }
        Format::Csv => {
            let mut s = String::from("word,image\n");
            for (a, b) in &table.pairs {
                writeln!(s, "{},{}", word_string(a), word_string(b)).unwrap();
            }
            for w in &table.fixed {
                writeln!(s, "{},{}", word_string(w), word_string(w)).unwrap();
            }
            s
        }
        Format::Pretty => {
            let mut s = format!("allowable contents for m = {m} ({}):\n", contents.len());
            for c in &contents {
                let sign = if c.sign > 0 { '+' } else { '-' };
                writeln!(s, "  {sign} {}", word_string(&c.content)).unwrap();
            }
            writeln!(s, "pairs ({}):", table.pairs.len()).unwrap();
            for (a, b) in &table.pairs {
                writeln!(s, "  {} <-> {}", word_string(a), word_string(b)).unwrap();
            }
            for w in &table.fixed {
                writeln!(s, "fixed {}", word_string(w)).unwrap();
            }
            s
        }
    };
    Ok(out)
}
