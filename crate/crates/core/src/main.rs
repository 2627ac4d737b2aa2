fn main() {
    std::process::exit(hecke_mod_ell::cli::run());
}
