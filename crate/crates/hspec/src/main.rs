use clap::Parser;

fn main() {
    let cli = hspec::config::Cli::parse();
    match hspec::run(cli) {
        Ok((text, ok)) => {
            print!("{text}");
            std::process::exit(if ok { 0 } else { 1 });
        }
        Err(e) => {
            eprintln!("error: {e}");
            std::process::exit(1);
        }
    }
}
