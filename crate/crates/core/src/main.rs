fn main() {
    std::process::exit(contraction_kernels::cli::run(std::env::args_os()));
}
