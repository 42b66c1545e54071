#include <cstdio>

int main() {
  std::puts("certnum: subcommands not wired up yet");
  return 0;
}
