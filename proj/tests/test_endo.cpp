#include "helpers.hpp"

#include <doctest.h>
