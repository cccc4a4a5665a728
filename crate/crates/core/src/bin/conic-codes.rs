fn main() {
    let (stdout, stderr) = (std::io::stdout(), std::io::stderr());
    let code = conic_codes::cli::main_with(std::env::args_os(), &mut stdout.lock(), &mut stderr.lock());
    std::process::exit(code);
}
