#include "comin/chow.hpp"
int main(){return 0;}
