//! `twc`: see `twc --help` and [`twc::cli`].

fn main() {
    std::process::exit(twc::cli::main_with_args(std::env::args().skip(1)));
}
