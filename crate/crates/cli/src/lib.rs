//! Library side of the `moebius` binary, split out so tests can drive commands in-process.

pub mod args;
pub mod cache;
pub mod commands;
pub mod output;

use std::time::Instant;

use moebius_core::MoebiusError;
use serde_json::Value;

use args::{Cli, OutputFormat};
use commands::Context;

/// Runs one parsed invocation; returns the JSON envelope and, when requested and available, CSV text.
pub fn run(cli: &Cli) -> Result<(Value, Option<String>), MoebiusError> {
    let started = Instant::now();
    let ctx = Context::new(cli.global.clone());
    let report = commands::run(&ctx, &cli.command)?;
    let mut input = output::to_value(&cli.command);
    if let Value::Object(map) = &mut input {
        if let Some((_, args)) = map.iter_mut().next() {
            input = args.take();
        }
    } else {
        input = Value::Object(Default::default());
    }
    input["globals"] = output::to_value(&cli.global);
    let elapsed = (!cli.global.stable).then(|| started.elapsed().as_secs_f64() * 1000.0);
    let envelope = output::envelope(cli.command.name(), input, &report, elapsed);
    let csv = match cli.global.output {
        OutputFormat::Csv => report.csv.clone(),
        OutputFormat::Json => None,
    };
    Ok((envelope, csv))
}

pub fn exit_code(e: &MoebiusError) -> i32 {
    match e {
        MoebiusError::Parse(_) => 2,
        MoebiusError::InvalidParams(_) | MoebiusError::Precondition(_) | MoebiusError::Boundary(_) => 3,
        MoebiusError::Guard(_) => 4,
        MoebiusError::Invariant(_) => 5,
    }
}
