#include <chrono>
#include <csignal>
#include <iostream>
#include <stop_token>
#include <thread>

#include "cli.hpp"

namespace {

volatile std::sig_atomic_t g_interrupted = 0;

extern "C" void on_signal(int) { g_interrupted = 1; }

}  // namespace

int main(int argc, char** argv) {
  std::signal(SIGINT, on_signal);
  std::signal(SIGTERM, on_signal);

  std::stop_source cancel;
  // Signal handlers may only touch the flag; this thread forwards it.
  std::jthread watcher([&cancel](std::stop_token done) {
    while (!done.stop_requested()) {
      if (g_interrupted) {
        cancel.request_stop();
        return;
      }
      std::this_thread::sleep_for(std::chrono::milliseconds(50));
    }
  });

  std::vector<std::string> args(argv, argv + argc);
  int code = wildnum::cli::run(args, std::cout, std::cerr, cancel.get_token());
  std::cout.flush();
  return code;
}
