use std::io::Write;

fn main() {
    let inv = partition_gini_cli::run(std::env::args_os());
    let mut out = std::io::stdout().lock();
    let _ = out.write_all(inv.stdout.as_bytes());
    let _ = out.flush();
    eprint!("{}", inv.stderr);
    std::process::exit(inv.exit_code);
}
