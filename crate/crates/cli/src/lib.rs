//! File formats, reports and subcommands of the `homlts` tool.

pub mod args;
pub mod commands;
pub mod file;
pub mod report;

use anyhow::{Context, Result};

use args::{Cli, Command, Common, Format};
use report::Report;

pub struct Outcome {
    pub report: Report,
    pub format: Format,
    /// Whether the object went to `--output` instead of stdout.
    pub written: bool,
}

impl Outcome {
    /// Text reports end with the constructed object unless it was written to a file.
    pub fn render(&self) -> String {
        match self.format {
            Format::Json => self.report.render_json(),
            Format::Text => {
                let mut out = self.report.render_text();
                if let (false, Some(object)) = (self.written, &self.report.object) {
                    out.push_str(&file::to_json(object));
                }
                out
            }
        }
    }
}

/// Run a parsed command line, writing `--output` if requested.
pub fn run(cli: &Cli) -> Result<Outcome> {
    let (report, common): (Report, &Common) = match &cli.command {
        Command::Verify(a) => (commands::verify(&a.input)?, &a.common),
        Command::Induce(a) => (commands::induce(&a.input, a.which, a.sigma.as_deref())?, &a.common),
        Command::Embed(a) => (commands::embed(&a.input, a.which)?, &a.common),
        Command::Factor(a) => (commands::factor(&a.input, &a.target, &a.epsilon)?, &a.common),
    };
    let mut written = false;
    if let (Some(path), Some(object)) = (&common.output, &report.object) {
        std::fs::write(path, file::to_json(object)).with_context(|| format!("writing {}", path.display()))?;
        written = true;
    }
    Ok(Outcome {
        report,
        format: common.format,
        written,
    })
}
