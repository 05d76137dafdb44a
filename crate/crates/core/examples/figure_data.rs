//! Writes the figure CSVs through the library entry point used by the binary.

use clap::Parser;
use squeezeslab::cli::{run, Args, RunConfig};

fn main() -> squeezeslab::Result<()> {
    let dir = std::env::temp_dir().join("squeezeslab-figures");
    std::fs::create_dir_all(&dir)?;
    let jobs = [
        ("fig2", "variances"),
        ("fig3", "variances"),
        ("fig4", "pulseparams"),
        ("fig5", "pulseparams"),
        ("fig6", "pulseparams"),
        ("fig7", "spectrum"),
    ];
    for (preset, cmd) in jobs {
        let out = dir.join(format!("{preset}.csv"));
        let args = Args::parse_from(["squeezeslab", cmd, "--preset", preset, "--out", out.to_str().unwrap()]);
        run(&RunConfig::from_args(&args)?)?;
        println!("wrote {}", out.display());
    }
    Ok(())
}
