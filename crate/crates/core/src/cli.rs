//! Command-line front end.
//!
//! Output is a single flat JSON object (or a CSV header plus one row) per
//! invocation, numbers in 17 significant digits. Exit codes: 0 success,
//! 1 usage or input error, 2 failed validation, 3 oracle search failure.

use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::diameter::{cut_time_max_numeric, diameter_bound};
use crate::error::Error;
use crate::geodesic::exp_lens;
use crate::locus::{export_locus_csv, export_sr_csv, sample_cut_locus, sr_limit_sweep, Stratum};
use crate::metric::{t_of_tau, InitialCovector, MetricParams};
use crate::numfmt::sig17;
use crate::parallel::Execution;
use crate::times::{conjugate_tau, cut_time};
use crate::validate::{self, Level};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_VALIDATION: i32 = 2;
pub const EXIT_ORACLE: i32 = 3;

#[derive(Parser, Debug)]
#[command(name = "berger-lens", version, about = "Cut times, cut loci and diameters of Berger lens spaces")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum LevelArg {
    Quick,
    Full,
}

#[derive(Args, Debug)]
struct Lens {
    #[arg(long)]
    p: i64,
    /// Lens parameter q.
    #[arg(long = "qq")]
    qq: i64,
    #[arg(long = "I1")]
    i1: f64,
    #[arg(long = "I3")]
    i3: f64,
}

impl Lens {
    fn params(&self) -> Result<MetricParams, Error> {
        MetricParams::new(self.p, self.qq, self.i1, self.i3)
    }
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Endpoint of the arclength geodesic with covector direction (h3, phi).
    Exp {
        #[command(flatten)]
        lens: Lens,
        #[arg(long, allow_hyphen_values = true)]
        h3: f64,
        #[arg(long, allow_hyphen_values = true)]
        phi: f64,
        #[arg(long, allow_hyphen_values = true)]
        t: f64,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Boundary, conjugate and cut times for the vertical component h3.
    CutTime {
        #[command(flatten)]
        lens: Lens,
        #[arg(long, allow_hyphen_values = true)]
        h3: f64,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// First conjugate time.
    ConjugateTime {
        #[arg(long = "I1")]
        i1: f64,
        #[arg(long = "I3")]
        i3: f64,
        #[arg(long, allow_hyphen_values = true)]
        h3: f64,
    },
    /// Sample the cut locus on a covector grid and write it as CSV.
    CutLocus {
        #[command(flatten)]
        lens: Lens,
        #[arg(long)]
        nh3: usize,
        #[arg(long)]
        nphi: usize,
        #[arg(long)]
        out: PathBuf,
    },
    /// Diameter lower bound, optionally with the numeric maximum of t_cut.
    Diameter {
        #[command(flatten)]
        lens: Lens,
        #[arg(long)]
        numeric: bool,
        #[arg(long, default_value_t = 1000)]
        n: usize,
    },
    /// Cut-time quantities along a sequence of oblateness values toward -1.
    SrLimit {
        #[arg(long)]
        p: i64,
        /// Lens parameter q.
        #[arg(long = "qq")]
        qq: i64,
        #[arg(long = "I1")]
        i1: f64,
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true, required = true)]
        etas: Vec<f64>,
        #[arg(long)]
        out: PathBuf,
    },
    /// Run the self-check report.
    Validate {
        #[arg(long, value_enum, default_value = "quick")]
        level: LevelArg,
    },
}

fn json(fields: &[(&str, String)]) -> String {
    let body: Vec<String> = fields.iter().map(|(k, v)| format!("\"{k}\":{v}")).collect();
    format!("{{{}}}\n", body.join(","))
}

fn csv_row(fields: &[(&str, String)]) -> String {
    let head: Vec<&str> = fields.iter().map(|(k, _)| *k).collect();
    let row: Vec<String> = fields.iter().map(|(_, v)| v.trim_matches('"').to_string()).collect();
    format!("{}\n{}\n", head.join(","), row.join(","))
}

fn quoted(s: &str) -> String {
    format!("\"{s}\"")
}

fn render(fields: &[(&str, String)], format: Format) -> String {
    match format {
        Format::Json => json(fields),
        Format::Csv => csv_row(fields),
    }
}

fn execute(cmd: Command, out: &mut dyn Write) -> anyhow::Result<i32> {
    let exec = Execution::default();
    match cmd {
        Command::Exp { lens, h3, phi, t, format } => {
            let m = lens.params()?;
            let c = InitialCovector::new(h3, phi)?;
            if !(t.is_finite() && t >= 0.0) {
                return Err(Error::InvalidArgument(format!("t must be finite and >= 0, got {t}")).into());
            }
            let x = exp_lens(&c, t, &m).rep;
            let f = [("q0", sig17(x.q0)), ("q1", sig17(x.q1)), ("q2", sig17(x.q2)), ("q3", sig17(x.q3))];
            out.write_all(render(&f, format).as_bytes())?;
        }
        Command::CutTime { lens, h3, format } => {
            let m = lens.params()?;
            InitialCovector::new(h3, 0.0)?;
            let d = cut_time(h3, &m)?;
            let f = [
                ("tau_ell_minus", sig17(d.tau_ell_minus)),
                ("tau_ell_plus", sig17(d.tau_ell_plus)),
                ("tau_ell", sig17(d.tau_ell)),
                ("tau_conj", sig17(d.tau_conj)),
                ("t_cut", sig17(d.t_cut)),
                ("regime", quoted(d.regime.as_str())),
            ];
            out.write_all(render(&f, format).as_bytes())?;
        }
        Command::ConjugateTime { i1, i3, h3 } => {
            let m = MetricParams::new(1, 1, i1, i3)?;
            InitialCovector::new(h3, 0.0)?;
            let tau = conjugate_tau(h3, m.eta())?;
            let f = [("tau_conj", sig17(tau)), ("t_conj", sig17(t_of_tau(tau, h3, &m)))];
            out.write_all(json(&f).as_bytes())?;
        }
        Command::CutLocus { lens, nh3, nphi, out: path } => {
            let m = lens.params()?;
            let s = sample_cut_locus(&m, nh3, nphi, exec)?;
            export_locus_csv(&s, &path)?;
            let interval = s.iter().filter(|x| x.stratum == Stratum::IntervalSegment).count();
            let f = [
                ("rows", s.len().to_string()),
                ("surface", (s.len() - interval).to_string()),
                ("interval", interval.to_string()),
            ];
            out.write_all(json(&f).as_bytes())?;
        }
        Command::Diameter { lens, numeric, n } => {
            let m = lens.params()?;
            let b = diameter_bound(&m);
            let mut f = vec![
                ("value", sig17(b.value)),
                ("case", quoted(b.case_tag.as_str())),
                ("exact", b.exact.to_string()),
                ("argmax_h3", sig17(b.argmax_h3bar)),
            ];
            if numeric {
                let (v, h) = cut_time_max_numeric(&m, n, exec)?;
                f.push(("numeric_value", sig17(v)));
                f.push(("numeric_argmax_h3", sig17(h)));
            }
            out.write_all(json(&f).as_bytes())?;
        }
        Command::SrLimit { p, qq, i1, etas, out: path } => {
            let first = etas.first().copied().unwrap_or(-0.5);
            let base = MetricParams::with_eta(p, qq, i1, first)?;
            let rows = sr_limit_sweep(&base, &etas)?;
            export_sr_csv(&rows, &path)?;
            out.write_all(json(&[("rows", rows.len().to_string())]).as_bytes())?;
        }
        Command::Validate { level } => {
            let level = match level {
                LevelArg::Quick => Level::Quick,
                LevelArg::Full => Level::Full,
            };
            let report = validate::run(level, exec);
            out.write_all(report.render().as_bytes())?;
            if report.has_oracle_error() {
                return Ok(EXIT_ORACLE);
            }
            if !report.all_pass() {
                return Ok(EXIT_VALIDATION);
            }
        }
    }
    Ok(EXIT_OK)
}

fn exit_code(e: &anyhow::Error) -> i32 {
    match e.downcast_ref::<Error>() {
        Some(Error::NotReached { .. } | Error::NoPartner { .. }) => EXIT_ORACLE,
        _ => EXIT_USAGE,
    }
}

/// Parses `args` (including the program name) and runs the subcommand.
pub fn run<I, S>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if code == EXIT_OK { out.write_all(text.as_bytes()) } else { err.write_all(text.as_bytes()) };
            return code;
        }
    };
    match execute(cli.command, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e:#}");
            exit_code(&e)
        }
    }
}
