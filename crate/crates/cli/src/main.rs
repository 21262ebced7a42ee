fn main() {
    let code = solvkit_cli::main_with_io(
        std::env::args().collect(),
        &mut std::io::stdin(),
        &mut std::io::stdout(),
        &mut std::io::stderr(),
    );
    std::process::exit(code);
}
