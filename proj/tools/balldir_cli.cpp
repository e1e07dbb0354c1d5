// placeholder; replaced by the full CLI
#include <cstdio>
int main() { return 0; }
