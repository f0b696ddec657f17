#include <cstdio>
#include <exception>

#include "bv/cli.hpp"
#include "bv/sieve.hpp"

int main(int argc, char** argv) {
    try {
        return bv::run(bv::parse_args(argc, argv));
    } catch (const std::invalid_argument& e) {
        std::fprintf(stderr, "error: %s\n\n%s", e.what(),
                     bv::usage_text().c_str());
        return 2;
    } catch (const bv::ResourceError& e) {
        std::fprintf(stderr, "resource error: %s\n", e.what());
        return 2;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    }
}
