use clap::Parser;
use palrich_cli::{render_text, run, Cli, Report, EXIT_USAGE};

fn main() {
    let argv: Vec<String> = std::env::args().skip(1).collect();
    let json = argv.iter().any(|a| a == "--json");
    let report = match Cli::try_parse() {
        Ok(cli) => run(&cli, argv),
        Err(e) if !json || !e.use_stderr() => e.exit(),
        Err(e) => Report {
            command: argv,
            result: None,
            error: Some(e.kind().to_string()),
            warnings: Vec::new(),
            exit_code: EXIT_USAGE,
        },
    };
    if json {
        println!(
            "{}",
            serde_json::to_string_pretty(&report).expect("report serializes")
        );
    } else if report.error.is_some() {
        eprint!("{}", render_text(&report));
    } else {
        print!("{}", render_text(&report));
    }
    std::process::exit(report.exit_code);
}
