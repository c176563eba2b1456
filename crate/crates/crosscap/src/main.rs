fn main() {
    let (output, code) = crosscap::cli::run(std::env::args_os().skip(1));
    if code == 0 {
        print!("{output}");
    } else {
        eprint!("{output}");
        if !output.ends_with('\n') {
            eprintln!();
        }
    }
    std::process::exit(code);
}
