//! Command-line front end for the `equidist` library: scene files in,
//! JSON documents, CSV tables and SVG figures out.
//!
//! Exit codes: `0` checks passed, `1` a check failed, `2` invalid input.

#![allow(clippy::neg_cmp_op_on_partial_ord)] // `!(x > 0)` also rejects NaN

pub mod commands;
pub mod docs;
pub mod error;
pub mod fmt;
pub mod scene;
pub mod svg;

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};

pub use commands::Report;
pub use error::CliError;
use scene::{Layer, Mode, Scene};

#[derive(Debug, Parser)]
#[command(name = "equidist", version, about = "Convex polygons as equidistant sets of two focal sets")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct Io {
    /// Scene file (JSON, "version": 1).
    #[arg(long)]
    pub scene: PathBuf,
    /// Output path; the document goes to stdout when omitted.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Reflect O across the edge lines and build the Voronoi cells of the reflections.
    Construct {
        #[command(flatten)]
        io: Io,
    },
    /// Check that the polygon boundary is equidistant from {O} and the focal set.
    Verify {
        #[command(flatten)]
        io: Io,
        #[arg(long, value_enum)]
        mode: Option<Mode>,
        /// Samples per edge, endpoints included.
        #[arg(long)]
        samples: Option<usize>,
        #[arg(long)]
        eps: Option<f64>,
    },
    /// Extract the midset numerically and compare it with the exact one.
    Midset {
        #[command(flatten)]
        io: Io,
        #[arg(long)]
        pitch: Option<f64>,
        #[arg(long, value_enum)]
        mode: Option<Mode>,
    },
    /// Approximate a convex curve by inscribed polygons and tabulate Hausdorff distances.
    Converge {
        #[command(flatten)]
        io: Io,
        #[arg(long)]
        pitch: Option<f64>,
        #[arg(long, value_delimiter = ',')]
        n_list: Option<Vec<usize>>,
        #[arg(long)]
        radius: Option<f64>,
    },
    /// Draw the scene as SVG.
    Render {
        #[command(flatten)]
        io: Io,
        #[arg(long, value_enum, value_delimiter = ',')]
        layers: Option<Vec<Layer>>,
        #[arg(long)]
        pitch: Option<f64>,
        #[arg(long, value_enum)]
        mode: Option<Mode>,
    },
}

impl Command {
    fn io(&self) -> &Io {
        match self {
            Command::Construct { io }
            | Command::Verify { io, .. }
            | Command::Midset { io, .. }
            | Command::Converge { io, .. }
            | Command::Render { io, .. } => io,
        }
    }
}

pub fn run(cli: &Cli) -> Result<Report, CliError> {
    let io = cli.command.io();
    let scene = Scene::load(&io.scene)?;
    let out = io.out.as_deref();
    match &cli.command {
        Command::Construct { .. } => commands::construct(&scene, out),
        Command::Verify { mode, samples, eps, .. } => commands::verify(&scene, *mode, *samples, *eps, out),
        Command::Midset { pitch, mode, .. } => commands::midset(&scene, *pitch, *mode, out),
        Command::Converge { pitch, n_list, radius, .. } => {
            commands::converge(&scene, n_list.as_deref(), *radius, *pitch, out)
        }
        Command::Render { layers, pitch, mode, .. } => svg::render(&scene, layers.as_deref(), *pitch, *mode, out),
    }
}
