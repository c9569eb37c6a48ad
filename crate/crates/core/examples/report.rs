//! Runs command lines in process and prints their versioned reports.

fn main() {
    let lines: [&[&str]; 4] = [
        &["verify-bb", "--catalog", "jouanolou:1", "--json"],
        &["dicritical", "--form", "x^2*dx + y^2*(x*dy - y*dx)", "--json"],
        &["sing", "--catalog", "conic-pencil", "--chart", "Z2", "--csv"],
        &["milnor", "--form", "x*dy + y*dx + ", "--json"],
    ];
    for args in lines {
        let out = residua::cli::run(std::iter::once("residua").chain(args.iter().copied()));
        println!("$ residua {}  (exit {})", args.join(" "), out.code);
        print!("{}", out.stdout);
    }
}
