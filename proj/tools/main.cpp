#include "beamcode/cli.hpp"

int main(int argc, char** argv) {
  return beamcode::cli::dispatch(argc, argv);
}
