void descomp_placeholder_();
void descomp_placeholder_() {}
