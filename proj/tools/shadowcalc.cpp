// CLI entry point (subcommands wired as the library lands).
#include <cstdio>
int main() { std::fprintf(stderr, "{\"error\":\"not yet wired\"}\n"); return 2; }
