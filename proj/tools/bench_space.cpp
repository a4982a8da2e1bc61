// Times the parallel message-space kernels against the serial reference.
#include <chrono>
#include <iostream>

#include "semispace/mtsi.hpp"

using namespace semispace;

namespace {

template <typename F>
double time_ms(F&& fn) {
    auto start = std::chrono::steady_clock::now();
    fn();
    auto stop = std::chrono::steady_clock::now();
    return std::chrono::duration<double, std::milli>(stop - start).count();
}

}  // namespace

int main() {
    Universe u = build_universe({"a1", "a2", "a3", "a4"});
    World w{static_cast<std::uint32_t>(u.m - 1)};

    std::cout << "n=4: " << u.m << " worlds, " << (std::uint64_t(1) << u.m) << " messages\n";

    std::vector<Message> messages;
    double enum_serial = time_ms([&] { messages = enumerate_messages(u, ExecutionPolicy::Serial); });
    double enum_parallel = time_ms([&] { enumerate_messages(u, ExecutionPolicy::Parallel); });
    std::cout << "enumerate_messages  serial " << enum_serial << " ms, parallel " << enum_parallel
              << " ms (" << enum_serial / enum_parallel << "x)\n";

    double place_serial = time_ms(
        [&] { place_all(messages, w, u, RayScheme::Ratio, ExecutionPolicy::Serial); });
    double place_parallel = time_ms(
        [&] { place_all(messages, w, u, RayScheme::Ratio, ExecutionPolicy::Parallel); });
    std::cout << "place_all           serial " << place_serial << " ms, parallel " << place_parallel
              << " ms (" << place_serial / place_parallel << "x)\n";

    double verify_serial = time_ms([&] { verify_mtsi(u, w, ExecutionPolicy::Serial); });
    double verify_parallel = time_ms([&] { verify_mtsi(u, w, ExecutionPolicy::Parallel); });
    std::cout << "verify_mtsi         serial " << verify_serial << " ms, parallel "
              << verify_parallel << " ms (" << verify_serial / verify_parallel << "x)\n";
    return 0;
}
