#pragma once

namespace trafsig {

// Heavy inner loops (candidate support counting, dataset evaluation) exist
// in a plain serial form and an OpenMP form. Results are bit-identical;
// the serial path is the reference the tests compare against.
enum class exec_mode {
    serial,
    parallel,
};

}  // namespace trafsig
