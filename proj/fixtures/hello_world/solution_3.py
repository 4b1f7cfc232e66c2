# Say hello to the world
print('Hello World!')
