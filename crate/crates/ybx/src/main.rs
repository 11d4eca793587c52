use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use ybx::commands::{self, parse_list, parse_word, Outcome};
use ybx::document::{load_path, parse_exponents_list, Document};
use ybx::error::{CliError, CliResult};
use ybx::json::to_canonical;
use ybx::render::{render_json, render_text};

/// Verifier for colored Yang-Baxter systems, their representations and the
/// braidings they induce.
#[derive(Parser)]
#[command(name = "ybx", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Check every law of the document.
    Verify { file: PathBuf },
    /// Check the (colored) Yang-Baxter equation.
    Ybe {
        file: PathBuf,
        /// One-based triple `i,j,k`.
        #[arg(long)]
        triple: Option<String>,
    },
    /// Print or write the braiding on a pair of members.
    Braiding {
        file: PathBuf,
        /// One-based pair `i,j`.
        #[arg(long)]
        pair: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check the connecting-map condition for exponents `a1,a2,g1,g2`.
    PiCheck {
        file: PathBuf,
        #[arg(long)]
        exponents: String,
    },
    /// Check the pentagon for the tensor product of representations.
    Pentagon { file: PathBuf },
    /// List the YD characters on the unit object.
    Characters { file: PathBuf },
    /// Apply a braid word to a tensor power of one member.
    Braid {
        file: PathBuf,
        #[arg(long)]
        strands: usize,
        /// Letters such as "1 2 -1".
        #[arg(long, allow_hyphen_values = true)]
        word: String,
        /// One-based member index.
        #[arg(long, default_value_t = 1)]
        member: usize,
    },
    /// Run all applicable checks.
    Report {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Regenerate the example corpus.
    #[command(hide = true)]
    ExportCorpus { dir: PathBuf },
}

fn load(file: &Path) -> CliResult<Document> {
    load_path(file)
}

fn execute(command: Command) -> CliResult<(Option<Outcome>, String, Format)> {
    let file_of = |p: &Path| p.display().to_string();
    let text = Format::Text;
    Ok(match command {
        Command::Verify { file } => (Some(commands::verify(&load(&file)?)?), file_of(&file), text),
        Command::Ybe { file, triple } => {
            let t = triple.map(|t| parse_list::<3>(&t, "--triple")).transpose()?;
            (Some(commands::ybe(&load(&file)?, t)?), file_of(&file), text)
        }
        Command::Braiding { file, pair, out } => {
            let pair = parse_list::<2>(&pair, "--pair")?;
            let doc = load(&file)?;
            let outcome = commands::braiding(&doc, pair)?;
            if let Some(path) = out {
                let map = commands::braiding_map(&doc, pair)?;
                let body = to_canonical(&commands::braiding_document(pair, &map));
                std::fs::write(&path, body).map_err(|source| CliError::Io { path, source })?;
            }
            (Some(outcome), file_of(&file), text)
        }
        Command::PiCheck { file, exponents } => {
            let e = parse_list::<4>(&exponents, "--exponents")?;
            let e = parse_exponents_list(&e).map_err(CliError::Usage)?;
            (Some(commands::pi_check(&load(&file)?, e)?), file_of(&file), text)
        }
        Command::Pentagon { file } => (Some(commands::pentagon(&load(&file)?)?), file_of(&file), text),
        Command::Characters { file } => (Some(commands::characters(&load(&file)?)?), file_of(&file), text),
        Command::Braid {
            file,
            strands,
            word,
            member,
        } => {
            let word = parse_word(&word)?;
            (Some(commands::braid(&load(&file)?, strands, &word, member)?), file_of(&file), text)
        }
        Command::Report { file, format } => (Some(commands::report(&load(&file)?)?), file_of(&file), format),
        Command::ExportCorpus { dir } => {
            let n = ybx::corpus::export(&dir)?;
            (None, format!("wrote {n} documents to {}", dir.display()), text)
        }
    })
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match execute(cli.command) {
        Ok((Some(outcome), file, format)) => {
            let body = match format {
                Format::Text => render_text(&outcome, &file),
                Format::Json => render_json(&outcome, &file),
            };
            print!("{body}");
            ExitCode::from(outcome.exit_code() as u8)
        }
        Ok((None, message, _)) => {
            println!("{message}");
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
