#include <iostream>

int main() {
    std::cout << "ca_ps: not wired up yet\n";
    return 1;
}
