#include "run_cli.hpp"

int main(int argc, char** argv) { return smtc::run_cli(argc, argv); }
