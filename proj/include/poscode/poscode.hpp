#ifndef POSCODE_POSCODE_HPP
#define POSCODE_POSCODE_HPP

#include "anoto.hpp"
#include "bitgrid.hpp"
#include "errors.hpp"
#include "meshcode.hpp"
#include "pbm.hpp"
#include "rasnik.hpp"
#include "sequences.hpp"
#include "uniqueness.hpp"
#include "wavelet.hpp"

#endif
