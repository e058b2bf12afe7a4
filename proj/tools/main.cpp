#include <iostream>

int main() {
    std::cout << "altkit\n";
    return 0;
}
