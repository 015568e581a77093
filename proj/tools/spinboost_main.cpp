#include "spinboost/sweep.hpp"

int main(int argc, char** argv) { return spinboost::sweep_main(argc, argv); }
