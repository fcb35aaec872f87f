use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use stau_cli::{cmd_enumerate, cmd_extend, cmd_tau, cmd_verify, Caps, CliError};

#[derive(Parser)]
#[command(name = "stau", version, about = "Support τ-tilting pairs of bound quiver algebras")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct CapArgs {
    /// Override the field of the algebra file.
    #[arg(long)]
    field: Option<u32>,
    #[arg(long, default_value_t = 10_000)]
    max_nodes: usize,
    /// Largest total dimension of an indecomposable summand.
    #[arg(long, default_value_t = 64)]
    dim_cap: usize,
    /// Worker threads for enumeration; omit to stay on one thread.
    #[arg(long)]
    threads: Option<usize>,
}

impl CapArgs {
    fn caps(&self) -> Caps {
        Caps {
            max_nodes: self.max_nodes,
            dim_cap: self.dim_cap,
            threads: self.threads,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Enumerate support τ-tilting pairs and the Hasse quiver.
    Enumerate {
        algebra: PathBuf,
        #[command(flatten)]
        caps: CapArgs,
        /// Write the result document here (`-` for stdout).
        #[arg(long)]
        json: Option<PathBuf>,
        /// Write the Hasse quiver as DOT here (`-` for stdout).
        #[arg(long)]
        dot: Option<PathBuf>,
    },
    /// Print the Auslander-Reiten translate of a module.
    Tau {
        algebra: PathBuf,
        module: PathBuf,
        #[arg(long)]
        field: Option<u32>,
    },
    /// Print the algebra file of the one-point extension.
    Extend {
        algebra: PathBuf,
        module: PathBuf,
        #[arg(long)]
        field: Option<u32>,
        #[arg(long, default_value = "a")]
        vertex_name: String,
    },
    /// Check the extension theorems on every pair of the base algebra.
    Verify {
        algebra: PathBuf,
        module: PathBuf,
        #[command(flatten)]
        caps: CapArgs,
        #[arg(long, default_value = "a")]
        vertex_name: String,
        #[arg(long)]
        json: Option<PathBuf>,
    },
}

fn read(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.display().to_string(),
        source,
    })
}

fn write(path: &Path, text: &str) -> Result<(), CliError> {
    if path == Path::new("-") {
        print!("{text}");
        return Ok(());
    }
    std::fs::write(path, text).map_err(|source| CliError::Io {
        path: path.display().to_string(),
        source,
    })
}

fn run(cli: Cli) -> Result<bool, CliError> {
    match cli.command {
        Command::Enumerate { algebra, caps, json, dot } => {
            let text = read(&algebra)?;
            let out = cmd_enumerate(&text, caps.field, caps.caps())?;
            let to_stdout = |p: &Option<PathBuf>| p.as_deref() == Some(Path::new("-"));
            if !to_stdout(&json) && !to_stdout(&dot) {
                print!("{}", out.summary);
            }
            if let Some(p) = json {
                write(&p, &out.json)?;
            }
            if let Some(p) = dot {
                write(&p, &out.dot)?;
            }
            Ok(true)
        }
        Command::Tau { algebra, module, field } => {
            print!("{}", cmd_tau(&read(&algebra)?, &read(&module)?, field)?);
            Ok(true)
        }
        Command::Extend {
            algebra,
            module,
            field,
            vertex_name,
        } => {
            print!("{}", cmd_extend(&read(&algebra)?, &read(&module)?, field, &vertex_name)?);
            Ok(true)
        }
        Command::Verify {
            algebra,
            module,
            caps,
            vertex_name,
            json,
        } => {
            let out = cmd_verify(&read(&algebra)?, &read(&module)?, caps.field, &vertex_name, caps.caps())?;
            if json.as_deref() != Some(Path::new("-")) {
                print!("{}", out.table);
            }
            if let Some(p) = json {
                write(&p, &out.json)?;
            }
            Ok(out.passed)
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            // keep 2 for resource caps: usage errors are input errors
            return ExitCode::from(if e.use_stderr() { 3 } else { 0 });
        }
    };
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
