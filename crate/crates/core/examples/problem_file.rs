//! Runs the command line front end on a bundled problem file, e.g.
//! `cargo run --example problem_file -- problems/quintic_fermat.json`.

fn main() {
    let path = std::env::args().nth(1).unwrap_or_else(|| {
        concat!(
            env!("CARGO_MANIFEST_DIR"),
            "/../../problems/cubic_surface.json"
        )
        .to_string()
    });
    let code = toric_hodge::cli::run(["toric-hodge", "hodge", "--input", &path]);
    std::process::exit(code);
}
