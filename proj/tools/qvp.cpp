#include <cstdio>
int main(){ std::puts("qvp"); return 0; }
