// placeholder until the cli wiring lands
int main() { return 0; }
