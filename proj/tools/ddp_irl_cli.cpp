#include <cstdio>
int main() { std::puts("ddp-irl placeholder"); return 0; }
