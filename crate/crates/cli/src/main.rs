fn main() {
    let stdout = std::io::stdout();
    let status = archcat_cli::run(std::env::args_os(), &mut stdout.lock());
    std::process::exit(status);
}
