mod commands;
mod output;

use std::io::Write;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use kgamma::shapes::{Partition, Permutation, SkewShape};
use kgamma::tableaux::SetValuedTableau;
use kgamma::verify::SUITES;

/// Set-valued tableaux, stable Grothendieck polynomials and the K-theory
/// of Grassmannians.
///
/// Partitions are written `3,2,1` (the empty partition is `0`), skew shapes
/// `4,3,2/1`, permutations in one-line notation `2,4,1,3`, and tableaux
/// row by row as `{1}{1,2} / {2,3}`.
#[derive(Parser, Debug)]
#[command(name = "kgamma", version)]
pub struct Cli {
    /// Number of x variables.
    #[arg(long, global = true, default_value_t = 4)]
    pub vars: usize,
    /// Number of y variables.
    #[arg(long, global = true, default_value_t = 4)]
    pub yvars: usize,
    /// Degree cap for polynomials and power series.
    #[arg(long, global = true, default_value_t = 10)]
    pub deg: usize,
    /// Emit a single JSON document instead of text.
    #[arg(long, global = true)]
    pub json: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Expand G_λ · G_μ.
    Mult { lambda: Partition, mu: Partition },
    /// Expand the coproduct of G_ν.
    Coprod { nu: Partition },
    /// Expand G_{ν/λ} in the basis G_μ.
    Skew { shape: SkewShape },
    /// Expand G_{ν∥λ}.
    Sslash { nu: Partition, lambda: Partition },
    /// Expand G_{(1^ℓ)} · G_λ by the Pieri rule.
    Pieri { lambda: Partition, len: usize },
    /// The stable Grothendieck polynomial of a permutation and its expansion.
    Stable { w: Permutation },
    /// G_θ(x_1..x_p) for a straight or skew shape.
    Poly {
        shape: SkewShape,
        /// Expand the double polynomial G_ν(x; y) instead (straight shapes only).
        #[arg(long)]
        double: bool,
    },
    /// Product of Schubert structure sheaves on Gr(d, n).
    Grmult { d: usize, n: usize, lambda: Partition, mu: Partition },
    /// Pushforward of a triple product of Schubert structure sheaves on Gr(d, n).
    Tripleint { d: usize, n: usize, lambda: Partition, mu: Partition, nu: Partition },
    /// Check the duality between structure sheaves and ideal sheaves on Gr(d, n).
    Dualcheck { d: usize, n: usize },
    /// The antipode of G_λ, truncated at the degree cap.
    Antipode { lambda: Partition },
    /// Trace the product of a column with a tableau.
    Insert {
        /// A single column, e.g. `{1} / {2,3}`.
        column: SetValuedTableau,
        tableau: SetValuedTableau,
    },
    /// Run a suite of invariant checks.
    Verify {
        #[arg(value_parser = clap::builder::PossibleValuesParser::new(SUITES))]
        suite: String,
        #[arg(long)]
        max_weight: Option<usize>,
        #[arg(long)]
        max_entry: Option<u32>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match commands::run(&cli) {
        Ok((doc, ok)) => {
            let text = if cli.json { doc.render_json() } else { doc.render_text() };
            let mut stdout = std::io::stdout().lock();
            if stdout.write_all(text.as_bytes()).and_then(|_| stdout.flush()).is_err() {
                return ExitCode::from(1);
            }
            if ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {}", e);
            ExitCode::from(1)
        }
    }
}
