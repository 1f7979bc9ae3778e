#include <cstdio>
int main(){ std::puts("orthogoval placeholder"); return 0; }
