#include <iostream>

#include "scband/acceptance.hpp"

int main() { return scband::run_acceptance(std::cout); }
