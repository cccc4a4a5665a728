//! The `conic-codes` command line: `params`, `spectrum`, `verify`, `net`.
//!
//! Reports go to standard output (or `--out`), progress and timings to
//! standard error, so identical inputs give byte-identical reports.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};

use crate::codes::{BIG_BUDGET, DEFAULT_BUDGET};
use crate::constructions::{
    construction1_code, construction1_survey, construction2_code, find_lambda_point, full_conic_code, line_code,
    summarize_net, CodeReport, LambdaSearch, NetContext, NetSummary, NetSurvey,
};
use crate::error::{Error, Result};
use crate::field::{gf2poly, Extension, Gf2h};
use crate::geometry::DeltaSet;
use crate::report::Claim;
use crate::spectrum::{spectrum, Family, SpectrumReport};
use crate::verify::{self, Suite, VerifyOptions, VerifyReport};

pub const MIN_Q: u64 = 4;
pub const MAX_Q: u64 = 64;

/// Exit status when every asserted statement holds.
pub const EXIT_OK: i32 = 0;
/// Exit status when some asserted statement fails.
pub const EXIT_MISMATCH: i32 = 1;
/// Exit status for usage, budget and input errors.
pub const EXIT_USAGE: i32 = 2;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize, ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    #[default]
    Json,
    Csv,
}

/// Settings shared by every subcommand, after merging the config file and
/// the flags (flags win).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RunConfig {
    pub q: u64,
    /// Hex bit string including the leading term, e.g. `0xb` for `x^3+x+1`.
    #[serde(default)]
    pub modulus: Option<String>,
    #[serde(default = "default_seed")]
    pub seed: u64,
    #[serde(default = "default_samples")]
    pub samples: usize,
    #[serde(default)]
    pub format: Format,
    #[serde(default)]
    pub big: bool,
    #[serde(default)]
    pub out: Option<PathBuf>,
}

fn default_seed() -> u64 {
    1
}

fn default_samples() -> usize {
    100
}

/// The config file, where every key is optional.
#[derive(Clone, Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
struct ConfigFile {
    q: Option<u64>,
    modulus: Option<String>,
    seed: Option<u64>,
    samples: Option<usize>,
    format: Option<Format>,
    big: Option<bool>,
    out: Option<PathBuf>,
}

impl RunConfig {
    /// Validates `q` and builds the field.
    pub fn field(&self) -> Result<Gf2h> {
        if !(MIN_Q..=MAX_Q).contains(&self.q) || !self.q.is_power_of_two() {
            return Err(Error::Usage(format!("q = {} must be a power of two in {MIN_Q}..={MAX_Q}", self.q)));
        }
        let modulus = self.modulus.as_deref().map(gf2poly::parse_modulus).transpose()?;
        Ok(Gf2h::with_order(self.q, modulus)?)
    }

    pub fn budget(&self) -> u128 {
        if self.big {
            BIG_BUDGET
        } else {
            DEFAULT_BUDGET
        }
    }
}

#[derive(Debug, Parser)]
#[command(name = "conic-codes", version, about = "Evaluation codes of conics on Δ over GF(2^h)")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Args)]
pub struct CommonArgs {
    /// Field order, a power of two in 4..=64.
    #[arg(long)]
    pub q: Option<u64>,
    /// Modulus as a hex bit string including the leading term.
    #[arg(long)]
    pub modulus: Option<String>,
    #[arg(long)]
    pub seed: Option<u64>,
    #[arg(long)]
    pub samples: Option<usize>,
    #[arg(long, value_enum)]
    pub format: Option<Format>,
    /// Raise the enumeration and sweep budgets.
    #[arg(long)]
    pub big: bool,
    /// Write the report here instead of standard output.
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// TOML file with any of the above keys.
    #[arg(long)]
    pub config: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum System {
    Lines,
    Parabolas,
    Conics,
    Net,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FamilyArg {
    Lines,
    Parabolas,
    AllConics,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SuiteArg {
    Field,
    Geometry,
    Lemma,
    Relations,
    Reducibility,
    Hasse,
    All,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Parameters and weight distribution of one code.
    Params {
        #[arg(long, value_enum)]
        system: System,
        #[command(flatten)]
        common: CommonArgs,
    },
    /// Histogram of |Δ ∩ C| over a family.
    Spectrum {
        #[arg(long, value_enum)]
        family: FamilyArg,
        #[command(flatten)]
        common: CommonArgs,
    },
    /// Exhaustive checks of the stated formulas.
    Verify {
        #[arg(long, value_enum, default_value = "all")]
        suite: SuiteArg,
        #[command(flatten)]
        common: CommonArgs,
    },
    /// The net of one seeded point and a survey over `--samples` points.
    Net {
        #[command(flatten)]
        common: CommonArgs,
    },
}

impl CommonArgs {
    pub fn resolve(&self) -> Result<RunConfig> {
        let file = match &self.config {
            Some(path) => read_config(path)?,
            None => ConfigFile::default(),
        };
        let q = self.q.or(file.q).ok_or_else(|| Error::Usage("--q is required (flag or config file)".into()))?;
        Ok(RunConfig {
            q,
            modulus: self.modulus.clone().or(file.modulus),
            seed: self.seed.or(file.seed).unwrap_or_else(default_seed),
            samples: self.samples.or(file.samples).unwrap_or_else(default_samples),
            format: self.format.or(file.format).unwrap_or_default(),
            big: self.big || file.big.unwrap_or(false),
            out: self.out.clone().or(file.out),
        })
    }
}

fn read_config(path: &Path) -> Result<ConfigFile> {
    let text = std::fs::read_to_string(path)?;
    toml::from_str(&text).map_err(|e| Error::Usage(format!("{}: {e}", path.display())))
}

/// Top-level JSON object: the command, the modulus, the overall verdict and
/// the command's own fields.
#[derive(Serialize)]
struct Envelope<'a, T: Serialize> {
    command: &'a str,
    modulus: String,
    holds: bool,
    #[serde(flatten)]
    body: &'a T,
}

/// What a subcommand produced.
pub enum Outcome {
    Params(CodeReport),
    Spectrum(SpectrumReport),
    Verify(VerifyReport),
    Net(Box<NetReport>),
}

/// The net of the seeded point, its code, and the survey.
#[derive(Clone, Debug, Serialize)]
pub struct NetReport {
    pub q: u64,
    pub seed: u64,
    pub net: NetSummary,
    pub code: CodeReport,
    pub survey: NetSurvey,
}

impl Outcome {
    pub fn claims(&self) -> Vec<&Claim> {
        match self {
            Outcome::Params(r) => r.claims.iter().collect(),
            Outcome::Spectrum(r) => r.claims.iter().collect(),
            Outcome::Verify(r) => r.suites.iter().flat_map(|s| s.claims.iter()).collect(),
            Outcome::Net(n) => n.net.claims.iter().chain(&n.code.claims).chain(&n.survey.claims).collect(),
        }
    }

    pub fn holds(&self) -> bool {
        self.claims().iter().all(|c| !c.is_violation())
    }
}

pub fn run_params(cfg: &RunConfig, system: System) -> Result<CodeReport> {
    let f = cfg.field()?;
    let delta = DeltaSet::new(&f, false);
    match system {
        System::Lines => line_code(&f, &delta, cfg.budget()),
        System::Parabolas => construction2_code(&f, &delta, cfg.budget()),
        System::Conics => full_conic_code(&f, &delta, cfg.budget()),
        System::Net => {
            let ext = Extension::<3>::new(&f);
            let p = find_lambda_point(&ext, LambdaSearch::Seeded(cfg.seed));
            construction1_code(&NetContext::new(&f, &ext, &p)?, &delta, cfg.budget())
        }
    }
}

pub fn run_spectrum(cfg: &RunConfig, family: FamilyArg) -> Result<SpectrumReport> {
    let family = match family {
        FamilyArg::Lines => Family::Lines,
        FamilyArg::Parabolas => Family::Parabolas,
        FamilyArg::AllConics => Family::AllConics,
    };
    spectrum(&cfg.field()?, family, cfg.big)
}

pub fn run_verify(cfg: &RunConfig, suite: SuiteArg, progress: &(dyn Fn(&str) + Sync)) -> Result<VerifyReport> {
    let suite = match suite {
        SuiteArg::Field => Suite::Field,
        SuiteArg::Geometry => Suite::Geometry,
        SuiteArg::Lemma => Suite::Lemma,
        SuiteArg::Relations => Suite::Relations,
        SuiteArg::Reducibility => Suite::Reducibility,
        SuiteArg::Hasse => Suite::Hasse,
        SuiteArg::All => Suite::All,
    };
    verify::run(&cfg.field()?, suite, VerifyOptions { seed: cfg.seed, big: cfg.big }, progress)
}

pub fn run_net(cfg: &RunConfig) -> Result<NetReport> {
    let f = cfg.field()?;
    let ext = Extension::<3>::new(&f);
    let delta = DeltaSet::new(&f, false);
    let p = find_lambda_point(&ext, LambdaSearch::Seeded(cfg.seed));
    let ctx = NetContext::new(&f, &ext, &p)?;
    let net = summarize_net(&ctx);
    let code = construction1_code(&ctx, &delta, cfg.budget())?;
    let survey = construction1_survey(&f, &ext, &delta, cfg.seed, cfg.samples, cfg.budget())?;
    Ok(NetReport { q: cfg.q, seed: cfg.seed, net, code, survey })
}

fn write_json<T: Serialize>(out: &mut dyn Write, command: &str, modulus: String, holds: bool, body: &T) -> Result<()> {
    serde_json::to_writer_pretty(&mut *out, &Envelope { command, modulus, holds, body })?;
    writeln!(out)?;
    Ok(())
}

/// Writes the report in the configured format.
pub fn write_outcome(out: &mut dyn Write, cfg: &RunConfig, outcome: &Outcome) -> Result<()> {
    let modulus = format!("{:#x}", cfg.field()?.modulus());
    let holds = outcome.holds();
    match cfg.format {
        Format::Json => match outcome {
            Outcome::Params(r) => write_json(out, "params", modulus, holds, r),
            Outcome::Spectrum(r) => write_json(out, "spectrum", modulus, holds, r),
            Outcome::Verify(r) => write_json(out, "verify", modulus, holds, r),
            Outcome::Net(n) => write_json(out, "net", modulus, holds, n.as_ref()),
        },
        Format::Csv => write_csv(out, outcome),
    }
}

fn write_csv(out: &mut dyn Write, outcome: &Outcome) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    match outcome {
        Outcome::Params(r) => {
            w.write_record(["q", "system", "n", "k", "d", "weight", "count"])?;
            let d = r.d.map_or(String::new(), |d| d.to_string());
            for (weight, count) in r.weight_distribution.pairs() {
                let row = [r.q.to_string(), r.system.clone(), r.n.to_string(), r.k.to_string(), d.clone()];
                w.write_record(row.into_iter().chain([weight.to_string(), count.to_string()]))?;
            }
        }
        Outcome::Spectrum(r) => {
            w.write_record(["q", "family", "count", "members", "annotations"])?;
            for row in &r.rows {
                let notes: Vec<String> = row.annotations.iter().map(|(k, v)| format!("{k}={v}")).collect();
                w.write_record([
                    r.q.to_string(),
                    r.family.to_string(),
                    row.count.to_string(),
                    row.members.to_string(),
                    notes.join(";"),
                ])?;
            }
        }
        Outcome::Verify(r) => {
            w.write_record(["q", "suite", "kind", "statement", "expected", "observed", "holds"])?;
            for s in &r.suites {
                for c in &s.claims {
                    let kind = serde_json::to_value(c.kind)?.as_str().unwrap_or_default().to_string();
                    w.write_record([
                        r.q.to_string(),
                        s.suite.to_string(),
                        kind,
                        c.statement.clone(),
                        c.expected.clone(),
                        c.observed.clone(),
                        c.holds.to_string(),
                    ])?;
                }
            }
        }
        Outcome::Net(n) => {
            w.write_record(["q", "seed", "sample", "point", "d", "dual_distance"])?;
            for (i, s) in n.survey.samples.iter().enumerate() {
                w.write_record([
                    n.survey.q.to_string(),
                    n.seed.to_string(),
                    i.to_string(),
                    s.point.join(" "),
                    s.d.map_or(String::new(), |d| d.to_string()),
                    s.dual_distance.map_or(String::new(), |d| d.to_string()),
                ])?;
            }
        }
    }
    w.flush()?;
    Ok(())
}

fn execute(command: &Command, err: &mut dyn Write) -> Result<(RunConfig, Outcome)> {
    let progress = |msg: &str| eprintln!("conic-codes: {msg}");
    Ok(match command {
        Command::Params { system, common } => {
            let cfg = common.resolve()?;
            let _ = writeln!(err, "conic-codes: params {system:?} at q = {}", cfg.q);
            let r = run_params(&cfg, *system)?;
            (cfg, Outcome::Params(r))
        }
        Command::Spectrum { family, common } => {
            let cfg = common.resolve()?;
            let _ = writeln!(err, "conic-codes: spectrum {family:?} at q = {}", cfg.q);
            let r = run_spectrum(&cfg, *family)?;
            (cfg, Outcome::Spectrum(r))
        }
        Command::Verify { suite, common } => {
            let cfg = common.resolve()?;
            let r = run_verify(&cfg, *suite, &progress)?;
            (cfg, Outcome::Verify(r))
        }
        Command::Net { common } => {
            let cfg = common.resolve()?;
            let _ = writeln!(err, "conic-codes: net at q = {}, seed {}, {} samples", cfg.q, cfg.seed, cfg.samples);
            let r = run_net(&cfg)?;
            (cfg, Outcome::Net(Box::new(r)))
        }
    })
}

/// Parses `args` (including the program name), runs the command and
/// returns the exit status.
pub fn main_with<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = write!(err, "{e}");
            return if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
        }
    };
    let start = Instant::now();
    let (cfg, outcome) = match execute(&cli.command, err) {
        Ok(x) => x,
        Err(e) => {
            let _ = writeln!(err, "conic-codes: error: {e}");
            return EXIT_USAGE;
        }
    };
    let written = match &cfg.out {
        Some(path) => std::fs::File::create(path)
            .map_err(Error::from)
            .and_then(|mut file| write_outcome(&mut file, &cfg, &outcome)),
        None => write_outcome(out, &cfg, &outcome),
    };
    if let Err(e) = written {
        let _ = writeln!(err, "conic-codes: error: {e}");
        return EXIT_USAGE;
    }
    let _ = writeln!(err, "conic-codes: elapsed {:.3}s", start.elapsed().as_secs_f64());
    let failing: Vec<&Claim> = outcome.claims().into_iter().filter(|c| c.is_violation()).collect();
    for c in &failing {
        let _ = writeln!(err, "conic-codes: FAIL {}: expected {}, observed {}", c.statement, c.expected, c.observed);
    }
    if failing.is_empty() {
        EXIT_OK
    } else {
        EXIT_MISMATCH
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run(args: &[&str]) -> (i32, String, String) {
        let (mut out, mut err) = (Vec::new(), Vec::new());
        let code = main_with(std::iter::once("conic-codes").chain(args.iter().copied()), &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn line_params_json() {
        let (code, out, _) = run(&["params", "--q", "8", "--system", "lines"]);
        assert_eq!(code, EXIT_OK);
        let v: serde_json::Value = serde_json::from_str(&out).unwrap();
        assert_eq!((v["n"].as_u64(), v["k"].as_u64(), v["d"].as_u64()), (Some(28), Some(3), Some(21)));
        assert_eq!(v["command"], "params");
        assert_eq!(v["modulus"], "0xb");
    }

    #[test]
    fn usage_errors() {
        assert_eq!(run(&["params", "--q", "6", "--system", "lines"]).0, EXIT_USAGE);
        assert_eq!(run(&["params", "--q", "128", "--system", "lines"]).0, EXIT_USAGE);
        assert_eq!(run(&["params", "--system", "lines"]).0, EXIT_USAGE);
        assert_eq!(run(&["params", "--q", "8", "--modulus", "0xf", "--system", "lines"]).0, EXIT_USAGE);
        assert_eq!(run(&["bogus"]).0, EXIT_USAGE);
        assert_eq!(run(&["spectrum", "--q", "32", "--family", "all-conics"]).0, EXIT_USAGE);
    }

    #[test]
    fn conic_code_mismatch_at_eight() {
        let (code, out, err) = run(&["params", "--q", "8", "--system", "conics"]);
        assert_eq!(code, EXIT_MISMATCH);
        let v: serde_json::Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["d"].as_u64(), Some(15));
        assert!(err.contains("FAIL minimum distance"));
    }

    #[test]
    fn csv_is_headered() {
        let (code, out, _) = run(&["params", "--q", "4", "--system", "lines", "--format", "csv"]);
        assert_eq!(code, EXIT_OK);
        let mut lines = out.lines();
        assert_eq!(lines.next(), Some("q,system,n,k,d,weight,count"));
        assert_eq!(lines.next(), Some("4,lines,6,3,3,0,1"));
    }
}
