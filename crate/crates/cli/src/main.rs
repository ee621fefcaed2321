use clap::Parser;

fn main() {
    let cli = match geoflow_cli::Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            // Usage errors map to the config-error code, not clap's default 2.
            let code = if e.use_stderr() { geoflow_cli::EXIT_ERROR } else { geoflow_cli::EXIT_PASS };
            let _ = e.print();
            std::process::exit(code);
        }
    };
    std::process::exit(geoflow_cli::run(cli));
}
