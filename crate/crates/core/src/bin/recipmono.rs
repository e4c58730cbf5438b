fn main() {
    recipmono::cli::run()
}
