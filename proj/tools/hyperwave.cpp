#include <iostream>
int main() { std::cout << "hyperwave stub\n"; return 0; }
