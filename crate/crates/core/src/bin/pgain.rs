use clap::Parser;
use potential_gain::cli::{run, RunConfig, EXIT_ERROR, EXIT_OK};

fn main() {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let code = match RunConfig::try_parse() {
        Ok(config) => run(config),
        Err(e) => {
            let _ = e.print();
            // keep 2 free for "did not converge"
            if e.use_stderr() {
                EXIT_ERROR
            } else {
                EXIT_OK
            }
        }
    };
    std::process::exit(code);
}
