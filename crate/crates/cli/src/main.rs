mod commands;

use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

/// Character tables, inclusion matrices and the depth of finite group
/// and semisimple algebra extensions.
///
/// Groups are written `S<n>`, `A<n>`, `C<n>`, `D<n>` (dihedral of order 2n),
/// `F20`, `V4`, `Q8`, or as generators in cycle notation, for example
/// `deg=4;gens=(1 2 3 4),(1 3)`. Subgroups are padded to the parent's degree.
/// DEPTHLAB_MAX_ORDER overrides the largest group order that will be
/// enumerated.
#[derive(Parser, Debug)]
#[command(name = "depthlab", version)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Exact character table of a group
    Table {
        group: String,
        #[arg(long)]
        json: bool,
    },
    /// Inclusion matrix and minimal depth of a subgroup
    Depth {
        group: String,
        subgroup: String,
        /// Largest depth tried
        #[arg(long, default_value_t = depthlab_core::depthcalc::DEFAULT_CAP)]
        cap: u32,
        #[arg(long)]
        json: bool,
        /// Print only the inclusion matrix
        #[arg(long)]
        matrix_only: bool,
    },
    /// Depth three of a tower H ≤ N ≤ G, by matrices and by the normal core
    Tower {
        group: String,
        middle: String,
        subgroup: String,
        #[arg(long)]
        json: bool,
    },
    /// Minimal depth of a raw inclusion matrix read from a JSON file
    /// (`-` reads standard input)
    MatrixDepth {
        path: String,
        #[arg(long, default_value_t = depthlab_core::depthcalc::DEFAULT_CAP)]
        cap: u32,
        #[arg(long)]
        json: bool,
    },
    /// Run one of the verification checks; exits 1 when it fails
    Verify {
        check: Check,
        /// Groups: `G H` for frobenius, separability, d2qb and d3qb;
        /// `G N H` for mackey and tower-equiv
        #[arg(required = true)]
        groups: Vec<String>,
        #[arg(long)]
        json: bool,
    },
    /// Bratteli diagram of a subgroup inclusion in Graphviz syntax
    Bratteli { group: String, subgroup: String },
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Check {
    /// Frobenius complement test and the value formula for S
    Frobenius,
    /// Mackey decomposition for every irreducible of H
    Mackey,
    /// Depth-two quasi-bases for a normal subgroup
    D2qb,
    /// Depth-three quasi-bases built from depth-two ones
    D3qb,
    /// Matrix and normal-core criteria for a depth-three tower agree
    TowerEquiv,
    /// Dual bases of the Frobenius map and the separability element
    Separability,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match commands::run(&cli.command) {
        Ok(out) => {
            print!("{}", out.text);
            ExitCode::from(if out.pass { 0 } else { 1 })
        }
        Err(f) => {
            eprintln!("depthlab: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
