#include <cstdio>

int main() {
    std::puts("trieig: commands not wired yet");
    return 1;
}
