#pragma once

namespace rookalg::cli {
int run(int argc, char** argv);
}
