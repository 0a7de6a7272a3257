// Regenerates the bundled data files from the census constructions.

#include <cstdio>
#include <fstream>
#include <string>

#include "tvrt/census.hpp"
#include "tvrt/verification.hpp"

using namespace tvrt;

namespace {
void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    out << text;
    std::printf("wrote %s\n", path.c_str());
}
}  // namespace

int main(int argc, char** argv) {
    std::string dir = argc > 1 ? argv[1] : "data";
    for (const auto& e : census())
        write_file(dir + "/" + e.name + ".tri", e.triangulation.serialize());
    write_file(dir + "/RP3_RP3.tri", rp3_connected_sum_rp3().serialize());
    write_file(dir + "/empty.lnk", FramedLink::from_pd(0, {}, {}).serialize());
    for (int p = 0; p <= 5; ++p)
        write_file(dir + "/unknot_" + std::to_string(p) + ".lnk",
                   framed_unknot(p).serialize());
    write_file(dir + "/hopf.lnk",
               FramedLink::from_pd(2, {{1, 3, 2, 4}, {3, 1, 4, 2}}, {0, 0}).serialize());
    write_file(dir + "/L4_1_chain.lnk",
               FramedLink::from_pd(2, {{1, 3, 2, 4}, {3, 1, 4, 2}}, {5, 1}).serialize());
    return 0;
}
